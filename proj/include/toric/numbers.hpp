#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

/// Divide all entries by their gcd; the zero vector is returned unchanged.
inline std::vector<Int> primitive(std::vector<Int> v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

/// Scale a rational vector to a primitive integer vector (positive scaling only).
inline std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int d = 1;
    for (const Rat& q : v) d = boost::multiprecision::lcm(d, den(q));
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(num(q) * (d / den(q)));
    return primitive(std::move(out));
}

inline std::string rat_str(const Rat& q) { return q.str(); }

struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

struct NonemptyIntervalRequired : MathError {
    explicit NonemptyIntervalRequired(const std::string& what) : MathError(what) {}
};

struct NotToric : MathError {
    explicit NotToric(const std::string& what) : MathError(what) {}
};

struct MultipleCollections : MathError {
    explicit MultipleCollections(const std::string& what) : MathError(what) {}
};

struct MixedRank : MathError {
    explicit MixedRank(const std::string& what) : MathError(what) {}
};

struct DisagreementBug : MathError {
    explicit DisagreementBug(const std::string& what) : MathError(what) {}
};

struct NoSolution : MathError {
    explicit NoSolution(const std::string& what) : MathError(what) {}
};

struct InconsistentFace : MathError {
    explicit InconsistentFace(const std::string& what) : MathError(what) {}
};

}  // namespace toric
