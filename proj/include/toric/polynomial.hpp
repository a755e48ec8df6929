#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Exponent vectors have a fixed length (the variable count);
/// no division is ever performed, so all arithmetic stays in the ring.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Int& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static Poly one(int nvars) { return constant(nvars, 1); }
    static Poly var(int nvars, int i) {
        Poly p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }
    /// Single term c * t^exp.
    static Poly term(const std::vector<int>& exp, const Int& c) {
        Poly p(int(exp.size()));
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    Int coeff(const std::vector<int>& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) {
            Int& dst = terms_[e];
            dst += c;
            if (dst == 0) terms_.erase(e);
        }
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        Poly r(nvars_);
        std::vector<int> e(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                Int& dst = r.terms_[e];
                dst += ca * cb;
                if (dst == 0) r.terms_.erase(e);
            }
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(const std::vector<Rat>& x) const {
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat t(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<std::vector<int>, Int> terms_;
};

}  // namespace toric
