#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "toric/perm.hpp"
#include "toric/plabic.hpp"
#include "toric/positroid.hpp"

using namespace toric;

namespace {

using Bases = std::vector<std::vector<int>>;

PlabicGraph star(int n, PlabicGraph::Color c) {
    PlabicGraph G;
    G.n = n;
    int v = G.add_internal(c);
    for (int i = 0; i < n; ++i) G.edges.emplace_back(v, i);
    return G;
}

}  // namespace

TEST_CASE("perfect orientations of stars") {
    PlabicGraph W = star(5, PlabicGraph::Color::White);
    auto ow = perfect_orientations(W);
    CHECK(ow.size() == 5);
    std::set<std::vector<int>> src;
    for (auto& o : ow) src.insert(o.source_set);
    for (int i = 1; i <= 5; ++i) CHECK(src.count({i}));

    PlabicGraph B = star(5, PlabicGraph::Color::Black);
    auto ob = perfect_orientations(B);
    CHECK(ob.size() == 5);
    for (auto& o : ob) CHECK(o.source_set.size() == 4);
}

TEST_CASE("disjoint components multiply") {
    PlabicGraph G;
    G.n = 4;
    int a = G.add_internal(PlabicGraph::Color::White);
    int b = G.add_internal(PlabicGraph::Color::White);
    G.edges.emplace_back(a, 0);
    G.edges.emplace_back(a, 1);
    G.edges.emplace_back(b, 2);
    G.edges.emplace_back(b, 3);
    CHECK(perfect_orientations(G).size() == 4);

    // Product law: positroid of a disjoint union is the direct sum.
    auto P = positroid_from_graph(G);
    Bases expect = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(P == expect);
}

TEST_CASE("is_forest") {
    CHECK(is_forest(star(6, PlabicGraph::Color::White)));
    PlabicGraph hex;
    hex.n = 6;
    std::vector<int> ring;
    for (int i = 0; i < 6; ++i)
        ring.push_back(hex.add_internal(i % 2 ? PlabicGraph::Color::Black
                                              : PlabicGraph::Color::White));
    for (int i = 0; i < 6; ++i) {
        hex.edges.emplace_back(ring[i], ring[(i + 1) % 6]);
        hex.edges.emplace_back(ring[i], i);
    }
    CHECK(!is_forest(hex));
}

TEST_CASE("family star graphs") {
    // k odd: sources are [k] plus all exchanges; k even: exchanges only.
    for (int n : {4, 6}) {
        for (int k = 1; k < n; ++k) {
            PlabicGraph G = family_star_graph(n, k);
            CHECK(is_forest(G));
            CHECK(G.internal_count() == 2);
            CHECK(int(G.edges.size()) == n + (k % 2));
            Bases expect;
            if (k % 2 == 1) {
                std::vector<int> full;
                for (int i = 1; i <= k; ++i) full.push_back(i);
                expect.push_back(full);
            }
            for (int i = 1; i <= k; ++i)
                for (int j = k + 1; j <= n; ++j) {
                    std::vector<int> b;
                    for (int x = 1; x <= k; ++x)
                        if (x != i) b.push_back(x);
                    b.push_back(j);
                    std::sort(b.begin(), b.end());
                    expect.push_back(b);
                }
            std::sort(expect.begin(), expect.end());
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            CHECK(positroid_from_graph(G) == expect);
        }
    }
}

TEST_CASE("family star graph matches the interval constituents for n = 4") {
    // v = s_2 = 1324, w = (1 4) = 4231.
    BruhatInterval I = interval(Permutation::from_one_line({1, 3, 2, 4}),
                                Permutation::from_one_line({4, 2, 3, 1}));
    for (int k = 1; k < 4; ++k)
        CHECK(positroid_from_graph(family_star_graph(4, k)) ==
              constituent(I, k).bases);
}

TEST_CASE("hypercube graph base cases") {
    PlabicGraph G1 = hypercube_graph(3, 1);
    CHECK(G1.n == 8);
    CHECK(G1.internal_count() == 1);
    CHECK(G1.internal_color[0] == PlabicGraph::Color::White);
    CHECK(positroid_from_graph(G1).size() == 8);

    // G_{2^l}(n): 2^l disjoint stars with white centers.
    PlabicGraph G4 = hypercube_graph(4, 4);
    CHECK(G4.n == 16);
    CHECK(G4.internal_count() == 4);
    for (auto c : G4.internal_color) CHECK(c == PlabicGraph::Color::White);
    CHECK(is_forest(G4));
}

TEST_CASE("hypercube graph for n=2 matches the base-case constituents") {
    BruhatInterval I = interval(Permutation::from_one_line({1, 3, 2, 4}),
                                Permutation::from_one_line({4, 2, 3, 1}));
    for (int k = 1; k < 4; ++k) {
        PlabicGraph G = hypercube_graph(2, k);
        CHECK(is_forest(G));
        CHECK(positroid_from_graph(G) == constituent(I, k).bases);
    }
}

TEST_CASE("color swap complements the positroid") {
    for (int k = 1; k < 4; ++k) {
        PlabicGraph G = hypercube_graph(2, k);
        PlabicGraph H = G;
        for (auto& c : H.internal_color)
            c = c == PlabicGraph::Color::White ? PlabicGraph::Color::Black
                                               : PlabicGraph::Color::White;
        Bases comp;
        for (const auto& b : positroid_from_graph(G)) {
            std::vector<int> cb;
            for (int x = 1; x <= 4; ++x)
                if (!std::binary_search(b.begin(), b.end(), x)) cb.push_back(x);
            comp.push_back(cb);
        }
        std::sort(comp.begin(), comp.end());
        CHECK(positroid_from_graph(H) == comp);
    }
}

TEST_CASE("G_10(5) is two copies of G_5(4)") {
    PlabicGraph G = hypercube_graph(5, 10);
    PlabicGraph H = hypercube_graph(4, 5);
    CHECK(G.n == 32);
    CHECK(G.internal_count() == 2 * H.internal_count());
    CHECK(G.edges.size() == 2 * H.edges.size());
    CHECK(is_forest(G));
}
