#include "toric/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

Permutation Permutation::from_one_line(const std::vector<int>& window) {
    Permutation p;
    int n = int(window.size());
    std::vector<bool> seen(n, false);
    p.w_.resize(n);
    for (int i = 0; i < n; ++i) {
        int x = window[i];
        if (x < 1 || x > n || seen[x - 1])
            throw MathError("not a permutation window: " + std::to_string(x));
        seen[x - 1] = true;
        p.w_[i] = x - 1;
    }
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.w_.resize(n());
    for (int i = 0; i < n(); ++i) p.w_[w_[i]] = i;
    return p;
}

Permutation Permutation::right_mult_s(int i) const {
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

Permutation Permutation::right_mult_t(int i, int j) const {
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[j - 1]);
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    Permutation p;
    p.w_.resize(n());
    for (int i = 0; i < n(); ++i) p.w_[i] = w_[o.w_[i]];
    return p;
}

std::vector<int> Permutation::prefix_set(int k) const {
    std::vector<int> s(w_.begin(), w_.begin() + k);
    for (int& x : s) ++x;
    std::sort(s.begin(), s.end());
    return s;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << w_[i] + 1;
    }
    return os.str();
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw MathError("bruhat_leq: mismatched n");
    int n = u.n();
    // Tableau criterion: sorted k-prefixes of u dominate those of w entrywise.
    // Maintain both sorted prefixes incrementally.
    std::vector<int> pu, pw;
    pu.reserve(n);
    pw.reserve(n);
    for (int k = 1; k <= n; ++k) {
        pu.insert(std::lower_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::lower_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int i = 0; i < k; ++i)
            if (pu[i] > pw[i]) return false;
    }
    return true;
}

std::vector<CoverEdge> covers_above(const Permutation& u,
                                    const std::optional<Permutation>& ceiling) {
    std::vector<CoverEdge> out;
    int n = u.n();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (u(i) > u(j)) continue;
            // l(u(i j)) = l(u)+1 iff no intermediate value lies between u(i), u(j).
            bool cover = true;
            for (int m = i + 1; m < j && cover; ++m)
                if (u(i) < u(m) && u(m) < u(j)) cover = false;
            if (!cover) continue;
            Permutation up = u.right_mult_t(i, j);
            if (ceiling && !bruhat_leq(up, *ceiling)) continue;
            out.push_back(CoverEdge{u, up, i, j});
        }
    }
    return out;
}

std::vector<Permutation> BruhatInterval::elements() const {
    std::vector<Permutation> out;
    for (const auto& r : ranks) out.insert(out.end(), r.begin(), r.end());
    return out;
}

bool BruhatInterval::contains(const Permutation& u) const {
    return bruhat_leq(v, u) && bruhat_leq(u, w);
}

int BruhatInterval::index_of(const Permutation& u) const {
    int base = 0;
    int lu = u.length() - v.length();
    for (int r = 0; r < int(ranks.size()); ++r) {
        if (r == lu) {
            auto it = std::lower_bound(ranks[r].begin(), ranks[r].end(), u);
            if (it != ranks[r].end() && *it == u)
                return base + int(it - ranks[r].begin());
            return -1;
        }
        base += int(ranks[r].size());
    }
    return -1;
}

BruhatInterval interval(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w))
        throw NonemptyIntervalRequired("interval: v is not <= w");
    BruhatInterval I;
    I.v = v;
    I.w = w;
    I.d = w.length() - v.length();
    I.ranks.assign(I.d + 1, {});
    I.ranks[0] = {v};
    for (int r = 0; r + 1 <= I.d; ++r) {
        std::vector<Permutation> next;
        for (const Permutation& u : I.ranks[r]) {
            for (CoverEdge& e : covers_above(u, w)) {
                next.push_back(e.upper);
                I.covers.push_back(std::move(e));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        I.ranks[r + 1] = std::move(next);
    }
    return I;
}

namespace {

RPolynomial rp_zero() { return RPolynomial{{}}; }

bool rp_is_zero(const RPolynomial& p) { return p.coeffs.empty(); }

RPolynomial rp_one() { return RPolynomial{{1}}; }

// p * q^1
RPolynomial rp_shift(const RPolynomial& p) {
    if (rp_is_zero(p)) return p;
    RPolynomial r;
    r.coeffs.assign(p.coeffs.size() + 1, 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i + 1] = p.coeffs[i];
    return r;
}

// p * (q - 1)
RPolynomial rp_mul_qm1(const RPolynomial& p) {
    if (rp_is_zero(p)) return p;
    RPolynomial r;
    r.coeffs.assign(p.coeffs.size() + 1, 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        r.coeffs[i + 1] += p.coeffs[i];
        r.coeffs[i] -= p.coeffs[i];
    }
    return r;
}

RPolynomial rp_add(const RPolynomial& a, const RPolynomial& b) {
    RPolynomial r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
    return r;
}

using RKey = std::pair<std::vector<int>, std::vector<int>>;

RPolynomial r_poly_rec(const Permutation& v, const Permutation& w,
                       std::map<RKey, RPolynomial>& memo) {
    if (v == w) return rp_one();
    if (!bruhat_leq(v, w)) return rp_zero();
    RKey key{v.one_line(), w.one_line()};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Pivot on the smallest i with w s_i < w.
    int piv = -1;
    for (int i = 1; i < w.n(); ++i)
        if (w.has_right_descent(i)) {
            piv = i;
            break;
        }
    Permutation ws = w.right_mult_s(piv);
    RPolynomial res;
    if (v.has_right_descent(piv)) {
        res = r_poly_rec(v.right_mult_s(piv), ws, memo);
    } else {
        res = rp_add(rp_shift(r_poly_rec(v.right_mult_s(piv), ws, memo)),
                     rp_mul_qm1(r_poly_rec(v, ws, memo)));
    }
    memo.emplace(std::move(key), res);
    return res;
}

}  // namespace

RPolynomial r_polynomial(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w))
        throw NonemptyIntervalRequired("r_polynomial: v is not <= w");
    thread_local std::map<RKey, RPolynomial> memo;
    return r_poly_rec(v, w, memo);
}

}  // namespace toric
