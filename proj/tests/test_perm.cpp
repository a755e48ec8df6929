#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "toric/perm.hpp"
#include "toric/poset.hpp"

using namespace toric;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation::from_one_line(w); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Independent oracle: dot-count (rank) criterion. u <= w iff for all i,j the
// number of a <= i with u(a) <= j is at least the count for w.
bool leq_oracle(const Permutation& u, const Permutation& w) {
    int n = u.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cw = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) <= j) ++cu;
                if (w(a) <= j) ++cw;
            }
            if (cu < cw) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("length") {
    CHECK(Permutation(4).length() == 0);
    CHECK(P({4, 2, 3, 1}).length() == 5);
    CHECK(P({1, 3, 2, 4}).length() == 1);
}

TEST_CASE("bruhat_leq basics") {
    Permutation e(4);
    for (const Permutation& w : all_perms(4)) CHECK(bruhat_leq(e, w));
    CHECK(bruhat_leq(P({1, 3, 2, 4}), P({4, 2, 3, 1})));
    CHECK(!bruhat_leq(P({2, 1, 4, 3}), P({1, 3, 2, 4})));
}

TEST_CASE("bruhat_leq agrees with the dot-count oracle on S_4") {
    auto perms = all_perms(4);
    for (const Permutation& u : perms)
        for (const Permutation& w : perms)
            CHECK(bruhat_leq(u, w) == leq_oracle(u, w));
}

TEST_CASE("covers_above") {
    // Longest element of S_3 has no covers.
    CHECK(covers_above(P({3, 2, 1})).empty());
    // Atoms of S_3 are the simple reflections.
    auto atoms = covers_above(Permutation(3));
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].i == 1);
    CHECK(atoms[0].j == 2);
    CHECK(atoms[1].i == 2);
    CHECK(atoms[1].j == 3);

    // Brute force over all 6 transpositions: v = 1324 has 4 atoms above it
    // below the ceiling 4231.
    Permutation u = P({1, 3, 2, 4}), ceil = P({4, 2, 3, 1});
    int expect = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Permutation t = u.right_mult_t(i, j);
            if (t.length() == u.length() + 1 && leq_oracle(t, ceil)) ++expect;
        }
    CHECK(expect == 4);
    CHECK(covers_above(u, ceil).size() == 4);
}

TEST_CASE("covers have length +1 and are Bruhat-above") {
    for (const Permutation& u : all_perms(4)) {
        for (const CoverEdge& e : covers_above(u)) {
            CHECK(e.upper.length() == u.length() + 1);
            CHECK(bruhat_leq(u, e.upper));
            CHECK(e.upper == u.right_mult_t(e.i, e.j));
        }
    }
}

TEST_CASE("interval") {
    Permutation v = P({1, 3, 2, 4}), w = P({4, 2, 3, 1});
    BruhatInterval I = interval(v, w);
    CHECK(I.d == 4);
    CHECK(I.size() == 16);
    std::vector<size_t> sizes;
    for (auto& r : I.ranks) sizes.push_back(r.size());
    CHECK(sizes == std::vector<size_t>{1, 4, 6, 4, 1});

    // Exhaustive filter agrees with BFS enumeration.
    int count = 0;
    for (const Permutation& u : all_perms(4))
        if (leq_oracle(v, u) && leq_oracle(u, w)) ++count;
    CHECK(count == I.size());

    BruhatInterval J = interval(v, v);
    CHECK(J.d == 0);
    CHECK(J.size() == 1);

    CHECK_THROWS_AS(interval(P({2, 1, 4, 3}), P({1, 3, 2, 4})),
                    NonemptyIntervalRequired);
}

TEST_CASE("asymmetric rank sizes in S_5") {
    // [32154, 53241] has rank sizes (1,6,9,5,1), confirmed by exhaustive
    // enumeration; reading the ranks top-down gives (1,5,9,6,1). Either way
    // the sizes are not palindromic.
    BruhatInterval I = interval(P({3, 2, 1, 5, 4}), P({5, 3, 2, 4, 1}));
    std::vector<size_t> sizes;
    for (auto& r : I.ranks) sizes.push_back(r.size());
    CHECK(sizes == std::vector<size_t>{1, 6, 9, 5, 1});
    std::vector<size_t> rev(sizes.rbegin(), sizes.rend());
    CHECK(sizes != rev);
}

TEST_CASE("interval enumeration equals exhaustive filter on random S_5 pairs") {
    auto perms = all_perms(5);
    for (size_t a = 0; a < perms.size(); a += 17) {
        for (size_t b = 0; b < perms.size(); b += 23) {
            const Permutation &v = perms[a], &w = perms[b];
            if (!bruhat_leq(v, w)) continue;
            int count = 0;
            for (const Permutation& u : perms)
                if (leq_oracle(v, u) && leq_oracle(u, w)) ++count;
            CHECK(count == interval(v, w).size());
        }
    }
}

TEST_CASE("r_polynomial") {
    Permutation e2(2);
    CHECK(r_polynomial(e2, e2).coeffs == std::vector<long long>{1});
    CHECK(r_polynomial(e2, P({2, 1})).coeffs == std::vector<long long>{-1, 1});

    // [1324, 4231]: degree 4, monic, R(1) = 0, coefficient of q^3 is -4;
    // the interval is a torus so R = (q-1)^4.
    RPolynomial R = r_polynomial(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    CHECK(R.degree() == 4);
    CHECK(R.coeffs.back() == 1);
    CHECK(R.eval_at_one() == 0);
    CHECK(R.coeff(3) == -4);
    CHECK(R.coeffs == std::vector<long long>{1, -4, 6, -4, 1});
}

TEST_CASE("r_polynomial degree, monicity and vanishing at 1 across S_4") {
    auto perms = all_perms(4);
    for (const Permutation& v : perms) {
        for (const Permutation& w : perms) {
            if (!bruhat_leq(v, w)) continue;
            RPolynomial R = r_polynomial(v, w);
            int d = w.length() - v.length();
            CHECK(R.degree() == d);
            CHECK(R.coeffs.back() == 1);
            if (d > 0) CHECK(R.eval_at_one() == 0);
            if (d >= 1) {
                CHECK(R.coeff(d - 1) <= 0);
                CHECK(R.coeff(d - 1) >= -d);
            }
        }
    }
}

TEST_CASE("interval_poset") {
    Permutation e3(3);
    BruhatInterval single = interval(e3, e3);
    IntervalPoset ip = interval_poset(single);
    CHECK(ip.poset.size() == 2);

    BruhatInterval s3 = interval(e3, P({3, 2, 1}));
    IntervalPoset full = interval_poset(s3);
    // 6 singletons, 8 length-1, 4 length-2 ([e,231], [e,312], [213,321],
    // [132,321]), 1 length-3, plus the empty set: 20 elements.
    CHECK(full.poset.size() == 20);
    CHECK(full.pairs.size() == 19);

    // Maximum is [v, w]; total count matches the subinterval sum.
    const auto& top = full.pairs.back();
    CHECK(top.first == e3);
    CHECK(top.second == P({3, 2, 1}));

    // The base-case interval is a Boolean lattice of rank 4, so its
    // subinterval poset has the size of the 4-cube face lattice: 3^4 + 1.
    BruhatInterval base = interval(P({1, 3, 2, 4}), P({4, 2, 3, 1}));
    IntervalPoset bp = interval_poset(base);
    CHECK(bp.poset.size() == 82);
    CHECK(bp.poset.check_lattice().is_lattice);
}

TEST_CASE("poset lattice checks") {
    // Boolean lattice B_4 as subsets of {0,1,2,3} ordered by inclusion.
    std::vector<int> subsets(16);
    std::iota(subsets.begin(), subsets.end(), 0);
    std::sort(subsets.begin(), subsets.end(), [](int a, int b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    Poset b4(16, [&](int x, int y) {
        return (subsets[x] & ~subsets[y]) == 0;
    });
    CHECK(b4.check_lattice().is_lattice);

    // Bruhat order of S_3 is not a lattice: the two atoms have no join.
    BruhatInterval s3 = interval(Permutation(3), P({3, 2, 1}));
    auto elems = s3.elements();
    Poset p3(int(elems.size()), [&](int x, int y) {
        return bruhat_leq(elems[x], elems[y]);
    });
    auto lc = p3.check_lattice();
    CHECK(!lc.is_lattice);
    CHECK(lc.missing_join);
    CHECK(elems[lc.x].length() == 1);
    CHECK(elems[lc.y].length() == 1);

    // 4-crown: the face poset of a 4-gon is a lattice (brute-force table).
    // Elements: bottom, 4 vertices, 4 edges, top.
    auto crown_leq = [](int x, int y) {
        if (x == y || x == 0 || y == 9) return true;
        if (y == 0 || x == 9) return false;
        if (x >= 1 && x <= 4 && y >= 5 && y <= 8) {
            int vert = x - 1, edge = y - 5;  // edge e joins vertices e, e+1 mod 4
            return vert == edge || vert == (edge + 1) % 4;
        }
        return false;
    };
    Poset crown(10, crown_leq);
    CHECK(crown.check_lattice().is_lattice);
}
