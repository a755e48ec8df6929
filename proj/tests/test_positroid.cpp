#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "toric/positroid.hpp"

using namespace toric;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation::from_one_line(w); }

using Bases = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("constituent") {
    BruhatInterval base = interval(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    CHECK(constituent(base, 4).bases == Bases{{1, 2, 3, 4}});
    CHECK(constituent(base, 2).bases == Bases{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

    BruhatInterval crown = interval(P({2, 1, 4, 3}), P({4, 2, 3, 1}));
    CHECK(constituent(crown, 2).bases ==
          Bases{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(constituent(crown, 1).bases == Bases{{2}, {3}, {4}});
}

TEST_CASE("verify_matroid") {
    // Every constituent of every interval of S_4 is a matroid.
    std::vector<int> ol(4);
    std::iota(ol.begin(), ol.end(), 1);
    std::vector<Permutation> perms;
    do {
        perms.push_back(Permutation::from_one_line(ol));
    } while (std::next_permutation(ol.begin(), ol.end()));
    for (const Permutation& v : perms)
        for (const Permutation& w : perms) {
            if (!bruhat_leq(v, w)) continue;
            BruhatInterval I = interval(v, w);
            for (int k = 1; k <= 4; ++k) CHECK(verify_matroid(constituent(I, k)));
        }

    // {12, 34} fails exchange between disjoint pairs.
    Constituent bad;
    bad.n = 4;
    bad.k = 2;
    bad.bases = {{1, 2}, {3, 4}};
    CHECK(!verify_matroid(bad));

    Constituent single;
    single.n = 3;
    single.k = 2;
    single.bases = {{1, 3}};
    CHECK(verify_matroid(single));
}

TEST_CASE("grassmann_necklace") {
    // Uniform matroid U_{1,n}: I_a = {a}.
    Constituent u1;
    u1.n = 5;
    u1.k = 1;
    for (int i = 1; i <= 5; ++i) u1.bases.push_back({i});
    GrassmannNecklace N = grassmann_necklace(u1);
    for (int a = 1; a <= 5; ++a) CHECK(N.entries[a - 1] == std::vector<int>{a});

    // Base case k=2, frozen from a verified run of the Gale-minimum scan:
    // bases {13,14,23,24}; shifted orders give (13, 23, 34?...) computed below.
    BruhatInterval base = interval(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    Constituent C = constituent(base, 2);
    GrassmannNecklace NB = grassmann_necklace(C);
    // Check the defining property directly: entry a is Gale-minimal for <_a.
    for (int a = 1; a <= 4; ++a) {
        auto shifted_key = [&](const std::vector<int>& s) {
            std::vector<int> key;
            for (int x : s) key.push_back((x - a + 4) % 4);
            std::sort(key.begin(), key.end());
            return key;
        };
        std::vector<int> best;
        for (const auto& b : C.bases) {
            auto kb = shifted_key(b);
            if (best.empty() || kb < shifted_key(best) ||
                (kb == shifted_key(best) && b < best))
                best = b;
        }
        CHECK(NB.entries[a - 1] == best);
        CHECK(C.has_basis(NB.entries[a - 1]));
    }
}

TEST_CASE("necklace entries are Gale-minimal, S_4 sweep") {
    std::vector<int> ol(4);
    std::iota(ol.begin(), ol.end(), 1);
    std::vector<Permutation> perms;
    do {
        perms.push_back(Permutation::from_one_line(ol));
    } while (std::next_permutation(ol.begin(), ol.end()));
    for (size_t vi = 0; vi < perms.size(); vi += 3)
        for (size_t wi = 0; wi < perms.size(); wi += 5) {
            if (!bruhat_leq(perms[vi], perms[wi])) continue;
            BruhatInterval I = interval(perms[vi], perms[wi]);
            for (int k = 1; k < 4; ++k) {
                Constituent C = constituent(I, k);
                GrassmannNecklace N = grassmann_necklace(C);
                REQUIRE(int(N.entries.size()) == 4);
                for (int a = 1; a <= 4; ++a) {
                    CHECK(C.has_basis(N.entries[a - 1]));
                    // Gale-dominance: entry a dominates every basis in <_a.
                    auto shift = [&](int x) { return (x - a + 4) % 4; };
                    for (const auto& b : C.bases) {
                        std::vector<int> sb, se;
                        for (int x : b) sb.push_back(shift(x));
                        for (int x : N.entries[a - 1]) se.push_back(shift(x));
                        std::sort(sb.begin(), sb.end());
                        std::sort(se.begin(), se.end());
                        for (int t = 0; t < k; ++t) CHECK(se[t] <= sb[t]);
                    }
                }
            }
        }
}

TEST_CASE("positroid polytope dimension equals distinct necklace entries minus one") {
    // For toric intervals only.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{1, 3, 2, 4}, {4, 2, 3, 1}},
        {{2, 1, 4, 3}, {4, 2, 3, 1}},
        {{1, 3, 2, 5, 4, 6}, {6, 2, 3, 4, 5, 1}},
    };
    for (const auto& [vol, wol] : cases) {
        BruhatInterval I = interval(Permutation::from_one_line(vol),
                                    Permutation::from_one_line(wol));
        int n = int(vol.size());
        for (int k = 1; k <= n; ++k) {
            Constituent C = constituent(I, k);
            GrassmannNecklace N = grassmann_necklace(C);
            std::set<std::vector<int>> distinct(N.entries.begin(), N.entries.end());
            CHECK(positroid_polytope(C).dim == int(distinct.size()) - 1);
        }
    }
}

TEST_CASE("constituents determine the interval") {
    CHECK(constituents_determine_interval(3));
    CHECK(constituents_determine_interval(4));
    CHECK(constituents_determine_interval(5, 400, 2024));

    // Two distinct intervals of S_3 share the same M_1.
    std::vector<int> ol(3);
    std::iota(ol.begin(), ol.end(), 1);
    std::vector<Permutation> perms;
    do {
        perms.push_back(Permutation::from_one_line(ol));
    } while (std::next_permutation(ol.begin(), ol.end()));
    bool collision = false;
    for (const Permutation& v1 : perms)
        for (const Permutation& w1 : perms)
            for (const Permutation& v2 : perms)
                for (const Permutation& w2 : perms) {
                    if (!bruhat_leq(v1, w1) || !bruhat_leq(v2, w2)) continue;
                    if (v1 == v2 && w1 == w2) continue;
                    if (constituent(interval(v1, w1), 1).bases ==
                        constituent(interval(v2, w2), 1).bases)
                        collision = true;
                }
    CHECK(collision);
}
