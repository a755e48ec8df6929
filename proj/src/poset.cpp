#include "toric/poset.hpp"

#include <algorithm>
#include <map>

namespace toric {

Poset::Poset(int m, const std::function<bool(int, int)>& leq) : m_(m) {
    up_.assign(m, Bits(m));
    down_.assign(m, Bits(m));
    for (int x = 0; x < m; ++x) {
        up_[x].set(x);
        down_[x].set(x);
        for (int y = x + 1; y < m; ++y) {
            if (leq(x, y)) {
                up_[x].set(y);
                down_[y].set(x);
            }
        }
    }
}

std::optional<int> Poset::join(int x, int y) const {
    Bits u = up_[x] & up_[y];
    int z = u.first_set();
    if (z < 0) return std::nullopt;
    // z is minimal in u (nothing below it in the linear extension lies in u);
    // the join exists iff u is contained in up(z), and then z is it.
    if (u.is_subset_of(up_[z])) return z;
    return std::nullopt;
}

std::optional<int> Poset::meet(int x, int y) const {
    Bits d = down_[x] & down_[y];
    int z = d.last_set();
    if (z < 0) return std::nullopt;
    if (d.is_subset_of(down_[z])) return z;
    return std::nullopt;
}

Poset::LatticeCheck Poset::check_lattice() const {
    for (int x = 0; x < m_; ++x) {
        for (int y = x + 1; y < m_; ++y) {
            if (up_[x].test(y)) continue;  // comparable pairs always have both
            if (!join(x, y)) return {false, x, y, true};
            if (!meet(x, y)) return {false, x, y, false};
        }
    }
    return {};
}

IntervalPoset interval_poset(const BruhatInterval& I) {
    std::vector<Permutation> elems = I.elements();
    int m = int(elems.size());
    // Cache Bruhat comparisons among interval elements.
    std::vector<Bits> leq_mat(m, Bits(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (bruhat_leq(elems[a], elems[b])) leq_mat[a].set(b);

    std::vector<std::pair<int, int>> idx_pairs;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (leq_mat[a].test(b)) idx_pairs.emplace_back(a, b);

    // Order subintervals by length so that containment respects indices,
    // then lexicographically for determinism. Element 0 is the empty set.
    std::stable_sort(idx_pairs.begin(), idx_pairs.end(),
                     [&](const auto& p, const auto& q) {
                         int lp = elems[p.second].length() - elems[p.first].length();
                         int lq = elems[q.second].length() - elems[q.first].length();
                         if (lp != lq) return lp < lq;
                         auto kp = std::make_pair(elems[p.first].one_line(),
                                                  elems[p.second].one_line());
                         auto kq = std::make_pair(elems[q.first].one_line(),
                                                  elems[q.second].one_line());
                         return kp < kq;
                     });

    int M = int(idx_pairs.size()) + 1;
    auto leq = [&](int x, int y) {
        if (x == 0) return true;
        if (y == 0) return false;
        const auto& [a, b] = idx_pairs[x - 1];
        const auto& [c, d] = idx_pairs[y - 1];
        // [a,b] contained in [c,d] iff c <= a and b <= d.
        return leq_mat[c].test(a) && leq_mat[b].test(d);
    };
    IntervalPoset out{{}, Poset(M, leq)};
    out.pairs.reserve(idx_pairs.size());
    for (const auto& [a, b] : idx_pairs) out.pairs.emplace_back(elems[a], elems[b]);
    return out;
}

}  // namespace toric
