#include "toric/classify.hpp"

#include <algorithm>

namespace toric {

bool is_two_crown(const BruhatInterval& I) {
    if (I.d != 3 || I.size() != 6) return false;
    if (I.ranks[1].size() != 2 || I.ranks[2].size() != 2) return false;
    for (const Permutation& a : I.ranks[1])
        for (const Permutation& c : I.ranks[2])
            if (!bruhat_leq(a, c)) return false;
    return true;
}

std::optional<std::pair<Permutation, Permutation>> has_two_crown_subinterval(
    const BruhatInterval& I) {
    std::vector<Permutation> elems = I.elements();
    int m = int(elems.size());
    std::vector<Bits> leq_mat(m, Bits(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (bruhat_leq(elems[a], elems[b])) leq_mat[a].set(b);

    // Candidate pairs (v', w') with length difference 3, in lex order on
    // (v' one-line, w' one-line); elements() is rank-then-lex ordered so a
    // stable re-sort by lex amounts to iterating lower elements in lex order.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return elems[a].one_line() < elems[b].one_line();
    });

    for (int a : order) {
        for (int b : order) {
            if (!leq_mat[a].test(b)) continue;
            if (elems[b].length() - elems[a].length() != 3) continue;
            // Collect the subinterval [elems[a], elems[b]].
            int atoms = 0, coatoms = 0, total = 0;
            std::vector<int> mid1, mid2;
            for (int c = 0; c < m; ++c) {
                if (!leq_mat[a].test(c) || !leq_mat[c].test(b)) continue;
                ++total;
                int r = elems[c].length() - elems[a].length();
                if (r == 1) { ++atoms; mid1.push_back(c); }
                if (r == 2) { ++coatoms; mid2.push_back(c); }
            }
            if (total != 6 || atoms != 2 || coatoms != 2) continue;
            bool crown = true;
            for (int x : mid1)
                for (int y : mid2)
                    if (!leq_mat[x].test(y)) crown = false;
            if (crown) return std::make_pair(elems[a], elems[b]);
        }
    }
    return std::nullopt;
}

namespace {

bool binomial_ranks(const BruhatInterval& I) {
    long long c = 1;
    for (int r = 0; r <= I.d; ++r) {
        if (int64_t(I.ranks[r].size()) != c) return false;
        c = c * (I.d - r) / (r + 1);
    }
    return true;
}

}  // namespace

ToricVerdict classify_toric(const BruhatInterval& I) {
    ToricVerdict out;

    out.crown_witness = has_two_crown_subinterval(I);
    out.by_two_crown = !out.crown_witness.has_value();

    // Lattice test on [v, w] itself.
    std::vector<Permutation> elems = I.elements();
    Poset P(int(elems.size()), [&](int x, int y) {
        return bruhat_leq(elems[x], elems[y]);
    });
    auto lc = P.check_lattice();
    out.by_lattice = lc.is_lattice;
    if (!lc.is_lattice) out.lattice_witness = std::make_pair(elems[lc.x], elems[lc.y]);

    // Lattice test on Int[v, w].
    IntervalPoset ip = interval_poset(I);
    out.by_interval_poset_lattice = ip.poset.check_lattice().is_lattice;

    // R-polynomial test: coefficient of q^{d-1} equals -d (a point is a
    // 0-torus, classified toric vacuously).
    if (I.d == 0) {
        out.by_r_poly = true;
    } else {
        RPolynomial R = r_polynomial(I.v, I.w);
        out.by_r_poly = (R.coeff(I.d - 1) == -int64_t(I.d));
    }

    out.is_hypercube = (I.size() == (1 << I.d)) && binomial_ranks(I);

    if (out.by_two_crown != out.by_lattice ||
        out.by_two_crown != out.by_interval_poset_lattice ||
        out.by_two_crown != out.by_r_poly)
        throw DisagreementBug("classify_toric: equivalence tests disagree on [" +
                              I.v.str() + ", " + I.w.str() + "]");
    out.is_toric = out.by_two_crown;
    return out;
}

ToricVerdict classify_toric(const Permutation& v, const Permutation& w) {
    return classify_toric(interval(v, w));
}

}  // namespace toric
