#include "toric/positroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace toric {

bool Constituent::has_basis(const std::vector<int>& b) const {
    return std::binary_search(bases.begin(), bases.end(), b);
}

Constituent constituent(const BruhatInterval& I, int k) {
    Constituent C;
    C.n = I.v.n();
    C.k = k;
    std::set<std::vector<int>> seen;
    for (const Permutation& u : I.elements()) seen.insert(u.prefix_set(k));
    C.bases.assign(seen.begin(), seen.end());
    return C;
}

bool verify_matroid(const Constituent& C) {
    if (C.bases.empty()) return false;
    for (const auto& A : C.bases) {
        for (const auto& B : C.bases) {
            for (int a : A) {
                if (std::binary_search(B.begin(), B.end(), a)) continue;
                bool found = false;
                for (int b : B) {
                    if (std::binary_search(A.begin(), A.end(), b)) continue;
                    std::vector<int> ex;
                    for (int x : A)
                        if (x != a) ex.push_back(x);
                    ex.push_back(b);
                    std::sort(ex.begin(), ex.end());
                    if (C.has_basis(ex)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

GrassmannNecklace grassmann_necklace(const Constituent& C) {
    GrassmannNecklace N;
    auto independent = [&](const std::vector<int>& s) {
        for (const auto& B : C.bases)
            if (std::includes(B.begin(), B.end(), s.begin(), s.end())) return true;
        return false;
    };
    for (int a = 1; a <= C.n; ++a) {
        std::vector<int> picked;
        for (int off = 0; off < C.n && int(picked.size()) < C.k; ++off) {
            int x = (a - 1 + off) % C.n + 1;
            std::vector<int> cand = picked;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), x), x);
            if (independent(cand)) picked = std::move(cand);
        }
        N.entries.push_back(picked);
    }
    return N;
}

LatticePolytope positroid_polytope(const Constituent& C) {
    std::vector<RatVec> pts;
    for (const auto& basis : C.bases) {
        RatVec e(C.n, Rat(0));
        for (int i : basis) e[i - 1] = 1;
        pts.push_back(std::move(e));
    }
    return hull(pts);
}

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

bool constituents_determine_interval(int n, int sample, uint64_t seed) {
    std::vector<Permutation> perms = all_perms(n);
    std::vector<std::pair<Permutation, Permutation>> intervals;
    if (sample <= 0) {
        for (const Permutation& v : perms)
            for (const Permutation& w : perms)
                if (bruhat_leq(v, w)) intervals.emplace_back(v, w);
    } else {
        std::mt19937_64 rng(seed);
        while (int(intervals.size()) < sample) {
            const Permutation& v = perms[rng() % perms.size()];
            const Permutation& w = perms[rng() % perms.size()];
            if (bruhat_leq(v, w)) intervals.emplace_back(v, w);
        }
    }
    std::map<std::vector<std::vector<std::vector<int>>>,
             std::pair<Permutation, Permutation>>
        signature;
    for (const auto& [v, w] : intervals) {
        BruhatInterval I = interval(v, w);
        std::vector<std::vector<std::vector<int>>> sig;
        for (int k = 1; k < n; ++k) sig.push_back(constituent(I, k).bases);
        auto [it, fresh] = signature.emplace(std::move(sig), std::make_pair(v, w));
        if (!fresh && !(it->second.first == v && it->second.second == w))
            return false;
    }
    return true;
}

}  // namespace toric
