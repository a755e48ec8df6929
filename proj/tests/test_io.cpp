#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/io.hpp"

using namespace toric;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation::from_one_line(w); }

}  // namespace

TEST_CASE("permutation and interval round-trips") {
    Permutation p = P({4, 2, 3, 1});
    CHECK(permutation_from_json(to_json(p)) == p);

    BruhatInterval I = interval(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    Json j = to_json(I);
    CHECK(j["ranks"].size() == 5);
    CHECK(j["covers"].size() == I.covers.size());
    BruhatInterval back = interval_from_json(j);
    CHECK(to_json(back) == j);
}

TEST_CASE("byte-stable output") {
    BruhatInterval I = interval(P({2, 1, 4, 3}), P({4, 2, 3, 1}));
    CHECK(to_json(I).dump() == to_json(I).dump());
    ToricVerdict t = classify_toric(I);
    std::string a = to_json(t, I.v, I.w).dump();
    std::string b = to_json(classify_toric(I.v, I.w), I.v, I.w).dump();
    CHECK(a == b);
}

TEST_CASE("minor json") {
    WiringGraph G = build_graph(P({1, 3, 2, 4}), ReducedWord{{1, 2, 3, 2, 1}}, 4);
    Json j = minor_to_json(G, {2, 4});
    CHECK(j["I"] == Json::array({2, 4}));
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["sign"] == 1);
    CHECK(j["terms"][0]["exp"]["t1"] == 1);
    CHECK(j["terms"][0]["exp"]["t3"] == 1);

    Json zero = minor_to_json(G, {3, 4});
    CHECK(zero["terms"].empty());
}

TEST_CASE("constituent and necklace json") {
    BruhatInterval I = interval(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    Constituent C = constituent(I, 2);
    Json cj = to_json(C);
    CHECK(cj["k"] == 2);
    CHECK(cj["bases"] == Json::array({Json::array({1, 3}), Json::array({1, 4}),
                                      Json::array({2, 3}), Json::array({2, 4})}));
    Json nj = to_json(grassmann_necklace(C));
    CHECK(nj.size() == 4);
    for (const auto& entry : nj) CHECK(entry.size() == 2);
}

TEST_CASE("polytope json") {
    LatticePolytope S = hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                              {Rat(1), Rat(1)}});
    FaceLattice L = face_lattice(S);
    Json j = to_json(S, &L);
    CHECK(j["vertices"].size() == 4);
    CHECK(j["facets"].size() == 4);
    CHECK(j["f_vector"] == Json::array({4, 4, 1}));
    for (const auto& f : j["facets"]) CHECK(f.contains("offset"));
}

TEST_CASE("dot exports") {
    BruhatInterval I = interval(Permutation(3), P({3, 2, 1}));
    std::string hasse = dot_hasse(I);
    CHECK(hasse.find("digraph") != std::string::npos);
    CHECK(hasse.find("1,2,3") != std::string::npos);

    std::string plabic = dot_plabic(family_star_graph(4, 2));
    CHECK(plabic.find("fillcolor=white") != std::string::npos);
    CHECK(plabic.find("fillcolor=black") != std::string::npos);

    WiringGraph G = build_graph(P({1, 3, 2, 4}), ReducedWord{{1, 2, 3, 2, 1}}, 4);
    std::string wiring = dot_wiring(G);
    CHECK(wiring.find("t1") != std::string::npos);
    CHECK(wiring.find("-1") != std::string::npos);
}

TEST_CASE("off export of the 4-crown moment polytope") {
    MRData data = mr_data(P({2, 1, 4, 3}), P({4, 2, 3, 1}),
                          ReducedWord{{1, 2, 3, 2, 1}});
    MomentPolytope MP = moment_polytope(data);
    std::string off = off_polytope(MP.P);
    CHECK(off.substr(0, 4) == "OFF\n");
    CHECK(off.find("10 8 16") != std::string::npos);

    LatticePolytope sq = hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                               {Rat(1), Rat(1)}});
    CHECK_THROWS_AS(off_polytope(sq), MathError);
}
