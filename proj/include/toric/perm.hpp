#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

/// Element of the symmetric group S_n in one-line notation.
/// External representation is 1-indexed; storage is 0-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : w_(n) {
        for (int i = 0; i < n; ++i) w_[i] = i;
    }

    /// Build from 1-indexed one-line notation; validates that the window is
    /// a permutation of [n].
    static Permutation from_one_line(const std::vector<int>& window);

    int n() const { return int(w_.size()); }

    /// Image of position i (1-indexed).
    int operator()(int i) const { return w_[i - 1] + 1; }

    std::vector<int> one_line() const {
        std::vector<int> out(w_.size());
        for (size_t i = 0; i < w_.size(); ++i) out[i] = w_[i] + 1;
        return out;
    }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (w_[i] != i) return false;
        return true;
    }

    int length() const;  // inversion count

    Permutation inverse() const;

    /// u * s_i: swap the entries at positions i, i+1 (1 <= i < n).
    Permutation right_mult_s(int i) const;

    /// u * (i j): swap the entries at positions i < j.
    Permutation right_mult_t(int i, int j) const;

    /// (u*v)(x) = u(v(x)).
    Permutation operator*(const Permutation& o) const;

    /// True iff right multiplication by s_i shortens, i.e. u(i) > u(i+1).
    bool has_right_descent(int i) const { return w_[i - 1] > w_[i]; }

    /// {u(1), ..., u(k)} as a sorted 1-indexed set.
    std::vector<int> prefix_set(int k) const;

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator!=(const Permutation& o) const { return w_ != o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

    std::string str() const;

private:
    std::vector<int> w_;
};

/// u <= w in Bruhat order, by the tableau (sorted prefix dominance) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

struct CoverEdge {
    Permutation lower, upper;
    int i, j;  // upper = lower * (i j), 1 <= i < j <= n
};

/// All covers u * (i j) of u, optionally restricted to those <= ceiling.
/// Sorted lexicographically by (i, j).
std::vector<CoverEdge> covers_above(const Permutation& u,
                                    const std::optional<Permutation>& ceiling = std::nullopt);

struct BruhatInterval {
    Permutation v, w;
    int d = 0;                                    // l(w) - l(v)
    std::vector<std::vector<Permutation>> ranks;  // ranks[r], lex-sorted
    std::vector<CoverEdge> covers;                // Hasse edges, deterministic order

    int size() const {
        int s = 0;
        for (const auto& r : ranks) s += int(r.size());
        return s;
    }
    std::vector<Permutation> elements() const;  // by rank, then lex
    bool contains(const Permutation& u) const;
    /// Index into elements() order, or -1.
    int index_of(const Permutation& u) const;
};

/// The interval [v, w]; throws NonemptyIntervalRequired unless v <= w.
BruhatInterval interval(const Permutation& v, const Permutation& w);

struct RPolynomial {
    std::vector<long long> coeffs;  // ascending degree

    int degree() const { return int(coeffs.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < int(coeffs.size())) ? coeffs[k] : 0;
    }
    long long eval_at_one() const {
        long long s = 0;
        for (long long c : coeffs) s += c;
        return s;
    }
};

/// Point-count polynomial of the interval [v, w] over F_q, by the descent
/// recursion. Memoized per thread.
RPolynomial r_polynomial(const Permutation& v, const Permutation& w);

}  // namespace toric
