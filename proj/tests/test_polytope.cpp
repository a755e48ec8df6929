#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "toric/polytope.hpp"

using namespace toric;

namespace {

RatVec V(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RatVec> cube_vertices(int d) {
    std::vector<RatVec> out;
    for (int m = 0; m < (1 << d); ++m) {
        RatVec v(d);
        for (int c = 0; c < d; ++c) v[c] = (m >> c) & 1;
        out.push_back(v);
    }
    return out;
}

// Brute-force facet enumeration for full-dimensional 3-polytopes: every
// plane through three points with all points on one side.
std::set<std::pair<IntVec, Rat>> facet_oracle_3d(const std::vector<RatVec>& pts) {
    std::set<std::pair<IntVec, Rat>> out;
    int m = int(pts.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = a + 1; c < m; ++c) {
                if (c == b) continue;
                RatVec u(3), w(3);
                for (int t = 0; t < 3; ++t) {
                    u[t] = pts[b][t] - pts[a][t];
                    w[t] = pts[c][t] - pts[a][t];
                }
                RatVec cross = {u[1] * w[2] - u[2] * w[1],
                                u[2] * w[0] - u[0] * w[2],
                                u[0] * w[1] - u[1] * w[0]};
                if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0) continue;
                for (int sgn : {1, -1}) {
                    RatVec nrm = cross;
                    for (auto& x : nrm) x *= sgn;
                    Rat off = nrm[0] * pts[a][0] + nrm[1] * pts[a][1] + nrm[2] * pts[a][2];
                    bool valid = true;
                    for (const auto& p : pts) {
                        Rat v = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2];
                        if (v > off) {
                            valid = false;
                            break;
                        }
                    }
                    if (!valid) continue;
                    IntVec prim = primitive_integer(nrm);
                    Rat scale;  // recompute the offset for the primitive normal
                    Rat off2 = Rat(prim[0]) * pts[a][0] + Rat(prim[1]) * pts[a][1] +
                               Rat(prim[2]) * pts[a][2];
                    out.emplace(prim, off2);
                }
            }
    return out;
}

}  // namespace

TEST_CASE("hull of the unit square") {
    LatticePolytope P = hull({V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
    CHECK(P.dim == 2);
    CHECK(P.vertices.size() == 4);
    CHECK(P.facets.size() == 4);
    CHECK(P.equations.empty());
    CHECK(P.contains(RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK(!P.contains(RatVec{Rat(2), Rat(0)}));
}

TEST_CASE("hull drops interior and non-extreme points") {
    // Midpoint of an edge and the barycenter are not vertices.
    LatticePolytope P = hull({V({0, 0}), V({2, 0}), V({0, 2}), V({1, 0}),
                              RatVec{Rat(2, 3), Rat(2, 3)}});
    CHECK(P.vertices.size() == 3);
    CHECK(P.facets.size() == 3);
}

TEST_CASE("hull of a repeated point") {
    LatticePolytope P = hull({V({3, 1, 4}), V({3, 1, 4})});
    CHECK(P.dim == 0);
    CHECK(P.vertices.size() == 1);
    CHECK(P.facets.empty());
    CHECK(P.equations.size() == 3);
    CHECK(P.contains(V({3, 1, 4})));
    CHECK(!P.contains(V({3, 1, 5})));
}

TEST_CASE("degenerate hull carries affine-hull equations") {
    // A square in the plane z = 1.
    LatticePolytope P = hull({V({0, 0, 1}), V({1, 0, 1}), V({0, 1, 1}), V({1, 1, 1})});
    CHECK(P.dim == 2);
    REQUIRE(P.equations.size() == 1);
    CHECK(P.equations[0].first == IntVec{0, 0, 1});
    CHECK(P.equations[0].second == 1);
    CHECK(P.facets.size() == 4);
    for (const auto& f : P.facets) CHECK(f.incidence.count() == 2);
}

TEST_CASE("hull of the 4-cube and its face lattice") {
    LatticePolytope P = hull(cube_vertices(4));
    CHECK(P.dim == 4);
    CHECK(P.vertices.size() == 16);
    CHECK(P.facets.size() == 8);
    FaceLattice L = face_lattice(P);
    CHECK(L.f_vector == std::vector<int>{16, 32, 24, 8, 1});
}

TEST_CASE("face lattice of the square and pyramid f-vector helpers") {
    LatticePolytope P = hull({V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
    FaceLattice L = face_lattice(P);
    CHECK(L.f_vector == std::vector<int>{4, 4, 1});
    CHECK(L.edges().size() == 4);

    CHECK(simplex_f_vector(1) == std::vector<long long>{2, 1});
    CHECK(simplex_f_vector(3) == std::vector<long long>{4, 6, 4, 1});
    CHECK(product_f_vector({2, 1}, {2, 1}) == std::vector<long long>{4, 4, 1});
    CHECK(pyramid_f_vector({4, 4, 1}) == std::vector<long long>{5, 8, 5, 1});

    // The square-pyramid summand of the 4-crown.
    LatticePolytope Q = hull({V({0, 0, 0}), V({0, 1, 0}), V({0, 0, 1}),
                              V({1, 1, 0}), V({1, 0, 1})});
    FaceLattice M = face_lattice(Q);
    CHECK(M.f_vector == std::vector<int>{5, 8, 5, 1});
}

TEST_CASE("hull facets match the brute-force oracle on random 3d point sets") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<RatVec> pts;
        int m = 4 + int(rng() % 7);
        for (int i = 0; i < m; ++i)
            pts.push_back(V({int(rng() % 5), int(rng() % 5), int(rng() % 5)}));
        RatMat D;
        for (size_t i = 1; i < pts.size(); ++i) {
            RatVec d(3);
            for (int c = 0; c < 3; ++c) d[c] = pts[i][c] - pts[0][c];
            D.push_back(d);
        }
        if (rank(D) != 3) continue;  // oracle only covers the full-dim case
        LatticePolytope P = hull(pts);
        REQUIRE(P.dim == 3);
        std::set<std::pair<IntVec, Rat>> got;
        for (const auto& f : P.facets) got.emplace(f.normal, f.offset);
        CHECK(got == facet_oracle_3d(pts));
    }
}

TEST_CASE("hull idempotence") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 8; ++i)
            pts.push_back(V({int(rng() % 4), int(rng() % 4), int(rng() % 4)}));
        LatticePolytope P = hull(pts);
        LatticePolytope Q = hull(P.vertices);
        CHECK(P.vertices == Q.vertices);
        CHECK(P.facets.size() == Q.facets.size());
        for (size_t i = 0; i < P.facets.size(); ++i) {
            CHECK(P.facets[i].normal == Q.facets[i].normal);
            CHECK(P.facets[i].offset == Q.facets[i].offset);
        }
    }
}

TEST_CASE("minkowski sums") {
    LatticePolytope seg_x = hull({V({0, 0}), V({1, 0})});
    LatticePolytope seg_y = hull({V({0, 0}), V({0, 1})});
    LatticePolytope sq = minkowski_sum(seg_x, seg_y);
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.dim == 2);

    LatticePolytope pt = hull({V({5, 7})});
    LatticePolytope tr = minkowski_sum(sq, pt);
    CHECK(tr.vertices.size() == 4);
    CHECK(tr.vertices[0] == V({5, 7}));
}

TEST_CASE("smallest_face and face dimensions") {
    LatticePolytope P = hull(cube_vertices(3));
    // Two adjacent vertices span an edge.
    Bits S(int(P.vertices.size()));
    S.set(P.vertex_index(V({0, 0, 0})));
    S.set(P.vertex_index(V({1, 0, 0})));
    Bits F = P.smallest_face(S);
    CHECK(F.count() == 2);
    CHECK(P.face_dim(F) == 1);
    // Two opposite vertices span the whole cube.
    Bits T(int(P.vertices.size()));
    T.set(P.vertex_index(V({0, 0, 0})));
    T.set(P.vertex_index(V({1, 1, 1})));
    CHECK(P.smallest_face(T).count() == 8);

    // A non-face: {000, 110} spans a diagonal of a square face.
    Bits D(int(P.vertices.size()));
    D.set(P.vertex_index(V({0, 0, 0})));
    D.set(P.vertex_index(V({1, 1, 0})));
    CHECK(P.smallest_face(D).count() == 4);

    CHECK(P.face_dim(Bits(int(P.vertices.size()))) == -1);
}

TEST_CASE("face lattice gate") {
    LatticePolytope P = hull(cube_vertices(3));
    CHECK_THROWS_AS(face_lattice(P, 2, 64), MathError);
    CHECK_THROWS_AS(face_lattice(P, 8, 4), MathError);
}

TEST_CASE("membership by facets agrees with a Caratheodory oracle in 4d") {
    // p lies in the hull iff it is a convex combination of at most dim+1
    // vertices; solved exactly over the rationals.
    auto in_hull_oracle = [](const std::vector<RatVec>& verts, const RatVec& p) {
        int d = int(p.size());
        int m = int(verts.size());
        std::vector<int> pick;
        std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
            if (need == 0) {
                // Solve sum l_i v_i = p, sum l_i = 1, l_i >= 0.
                int s = int(pick.size());
                RatMat A(d + 1, RatVec(s, Rat(0)));
                RatVec b(d + 1, Rat(0));
                for (int r = 0; r < d; ++r) {
                    for (int c = 0; c < s; ++c) A[r][c] = verts[pick[c]][r];
                    b[r] = p[r];
                }
                for (int c = 0; c < s; ++c) A[d][c] = 1;
                b[d] = 1;
                auto sol = solve_rational(A, b);
                if (!sol) return false;
                for (const Rat& l : *sol)
                    if (l < 0) return false;
                // The particular solution may have negative entries even when
                // a nonnegative one exists; accept only clean successes and
                // keep searching otherwise.
                return true;
            }
            for (int i = start; i + need <= m; ++i) {
                pick.push_back(i);
                if (rec(i + 1, need - 1)) {
                    pick.pop_back();
                    return true;
                }
                pick.pop_back();
            }
            return false;
        };
        for (int size = 1; size <= d + 1; ++size)
            if (rec(0, size)) return true;
        return false;
    };

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 10; ++i) {
            RatVec v(4);
            for (auto& x : v) x = int(rng() % 5);
            pts.push_back(v);
        }
        LatticePolytope P = hull(pts);
        if (P.dim != 4) continue;
        for (int probe = 0; probe < 40; ++probe) {
            RatVec p(4);
            for (auto& x : p) x = Rat(int(rng() % 9), 1 + int(rng() % 2));
            CHECK(P.contains(p) == in_hull_oracle(P.vertices, p));
        }
    }
}

TEST_CASE("integer linear algebra kernel") {
    // Diagonalization reconstructs the input: U A V = D.
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 2 + int(rng() % 4), n = 2 + int(rng() % 4);
        IntMat A(m, IntVec(n));
        for (auto& row : A)
            for (auto& x : row) x = Int(int(rng() % 9)) - 4;
        SmithForm S = smith_diagonalize(A);
        // U A V == diag.
        IntMat UA(m, IntVec(n, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < m; ++k) UA[i][j] += S.U[i][k] * A[k][j];
        IntMat UAV(m, IntVec(n, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) UAV[i][j] += UA[i][k] * S.V[k][j];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                Int expect = (i == j && i < S.rank) ? S.diag[i] : Int(0);
                CHECK(UAV[i][j] == expect);
            }
        // V Vinv == I.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s = 0;
                for (int k = 0; k < n; ++k) s += S.V[i][k] * S.Vinv[k][j];
                CHECK(s == (i == j ? 1 : 0));
            }
        CHECK(S.rank == rank_int(A));
    }

    // Integer solving: solvable and unsolvable cases.
    IntMat A = {{2, 0}, {0, 3}};
    auto x = solve_integer(A, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve_integer(A, {1, 0}).has_value());  // 2 does not divide 1
    CHECK(!solve_integer({{1, 1}, {1, 1}}, {0, 1}).has_value());  // inconsistent

    // Saturation: the lattice 2Z^2 saturates to Z^2; a diagonal line in Z^2
    // saturates to its primitive generator.
    IntMat sat1 = saturation_basis({{2, 0}, {0, 2}});
    CHECK(sat1.size() == 2);
    CHECK(rank_int(sat1) == 2);
    auto back = solve_integer(IntMat{{sat1[0][0], sat1[1][0]},
                                     {sat1[0][1], sat1[1][1]}},
                              {1, 0});
    CHECK(back.has_value());  // e_1 lies in the saturated lattice
    IntMat sat2 = saturation_basis({{4, 6}});
    REQUIRE(sat2.size() == 1);
    IntVec gen = sat2[0];
    if (gen[0] < 0)
        for (Int& v : gen) v = -v;
    CHECK(gen == IntVec{2, 3});
}
