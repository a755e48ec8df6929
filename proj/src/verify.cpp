#include "toric/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "toric/plabic.hpp"

namespace toric {

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

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(w[i], w[rng() % (i + 1)]);
    return Permutation::from_one_line(w);
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(pick);
            return;
        }
        for (int x = start; x <= n; ++x) {
            pick[depth] = x;
            rec(x + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

bool check_one_classification(const Permutation& v, const Permutation& w,
                              ClassificationStats& stats) {
    ToricVerdict t;
    try {
        t = classify_toric(v, w);
    } catch (const DisagreementBug& e) {
        stats.ok = false;
        stats.detail = e.what();
        return false;
    }
    ++stats.checked;
    if (t.is_toric) ++stats.toric;
    return t.is_toric;
}

}  // namespace

ClassificationStats verify_classification_exhaustive(int n) {
    ClassificationStats stats;
    auto perms = all_perms(n);
    for (const Permutation& v : perms) {
        for (const Permutation& w : perms) {
            if (!bruhat_leq(v, w)) continue;
            bool toric = check_one_classification(v, w, stats);
            if (!stats.ok) return stats;
            if (toric) {
                // Monotonicity: subintervals of toric intervals are toric,
                // certified by the crown criterion on each subinterval.
                BruhatInterval I = interval(v, w);
                auto elems = I.elements();
                for (const Permutation& a : elems)
                    for (const Permutation& b : elems) {
                        if (!bruhat_leq(a, b)) continue;
                        if (has_two_crown_subinterval(interval(a, b))) {
                            stats.ok = false;
                            stats.detail = "subinterval of toric [" + v.str() +
                                           ", " + w.str() + "] is not toric";
                            return stats;
                        }
                    }
            }
        }
    }
    return stats;
}

ClassificationStats verify_classification_sampled(int n, int count, uint64_t seed) {
    ClassificationStats stats;
    std::mt19937_64 rng(seed);
    while (stats.checked < count) {
        Permutation v = random_perm(n, rng), w = random_perm(n, rng);
        if (!bruhat_leq(v, w)) continue;
        check_one_classification(v, w, stats);
        if (!stats.ok) return stats;
    }
    return stats;
}

std::vector<std::pair<Permutation, Permutation>> toric_intervals_sn(int n) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto perms = all_perms(n);
    for (const Permutation& v : perms)
        for (const Permutation& w : perms) {
            if (!bruhat_leq(v, w)) continue;
            if (classify_toric(v, w).is_toric) out.emplace_back(v, w);
        }
    return out;
}

std::vector<std::pair<Permutation, Permutation>> sample_toric_intervals(
    int n, int count, uint64_t seed) {
    std::vector<std::pair<Permutation, Permutation>> out;
    std::mt19937_64 rng(seed);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    while (int(out.size()) < count) {
        Permutation v = random_perm(n, rng), w = random_perm(n, rng);
        if (!bruhat_leq(v, w)) continue;
        auto key = std::make_pair(v.one_line(), w.one_line());
        if (seen.count(key)) continue;
        if (!classify_toric(v, w).is_toric) continue;
        seen.insert(key);
        out.emplace_back(v, w);
    }
    return out;
}

CheckReport verify_lgv(const Permutation& v, const Permutation& w, bool toric) {
    CheckReport rep;
    int n = v.n();
    BruhatInterval I = interval(v, w);
    WiringGraph G = build_graph(v, default_reduced_word(w), n);
    auto M = symbolic_matrix(G);
    for (int k = 1; k <= n; ++k) {
        std::set<std::vector<int>> constituent_k;
        for (const Permutation& u : I.elements())
            constituent_k.insert(u.prefix_set(k));
        for (const auto& S : subsets_of(n, k)) {
            auto terms = flag_minor(G, S);
            if (lgv_polynomial(G, S) != matrix_flag_minor(M, S)) {
                rep.ok = false;
                rep.detail = "LGV/determinant mismatch on [" + v.str() + ", " +
                             w.str() + "]";
                return rep;
            }
            std::set<std::vector<int>> seen;
            for (const auto& t : terms) {
                if (seen.count(t.exponents)) {
                    rep.ok = false;
                    rep.detail = "repeated LGV exponent vector";
                    return rep;
                }
                seen.insert(t.exponents);
            }
            bool in_support = !terms.empty();
            if (in_support != constituent_k.count(S)) {
                rep.ok = false;
                rep.detail = "support/constituent mismatch on [" + v.str() + ", " +
                             w.str() + "]";
                return rep;
            }
            if (toric) {
                try {
                    auto mono = flag_minor_toric(G, S);
                    if (mono && (!mono->squarefree() || mono->sign != 1)) {
                        rep.ok = false;
                        rep.detail = "toric minor is not squarefree monic";
                        return rep;
                    }
                } catch (const MathError& e) {
                    rep.ok = false;
                    rep.detail = e.what();
                    return rep;
                }
            }
        }
    }
    return rep;
}

CheckReport verify_incidence_plucker_examples() {
    CheckReport rep;
    const ReducedWord word{{1, 2, 3, 2, 1}};
    for (auto vol : {std::vector<int>{1, 3, 2, 4}, std::vector<int>{2, 1, 4, 3}}) {
        WiringGraph G = build_graph(Permutation::from_one_line(vol), word, 4);
        auto M = symbolic_matrix(G);
        for (int r = 1; r <= 4; ++r) {
            for (int s = r; s <= 3; ++s) {
                for (const auto& I : subsets_of(4, r - 1)) {
                    for (const auto& J : subsets_of(4, s + 1)) {
                        if (!incidence_plucker(M, I, J).is_zero()) {
                            rep.ok = false;
                            rep.detail = "incidence relation fails";
                            return rep;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

CheckReport verify_structure(const Permutation& v, const Permutation& w,
                             const std::optional<ReducedWord>& word) {
    CheckReport rep;
    try {
        MRData data = mr_data(v, w, word);
        int n = v.n();
        std::vector<AffineEquivalence> maps;
        std::vector<LatticePolytope> summands;
        for (int k = 1; k < n; ++k) {
            Constituent C = constituent(data.I, k);
            maps.push_back(affine_equivalence(C, data.minors[k - 1], data.d));
            summands.push_back(summand_polytope(data, k));
            // The transformed positroid polytope must have exactly the
            // summand's vertices.
            std::set<RatVec> transformed;
            for (const auto& basis : C.bases) {
                IntVec img = maps.back().forward.apply(basis);
                transformed.insert(RatVec(img.begin(), img.end()));
            }
            std::set<RatVec> got(summands.back().vertices.begin(),
                                 summands.back().vertices.end());
            if (transformed != got) {
                rep.ok = false;
                rep.detail = "transformed positroid polytope differs from summand";
                return rep;
            }
        }
        MomentPolytope MP = moment_polytope(data);
        // Vertex formula through the affine maps.
        for (const Permutation& u : data.I.elements()) {
            IntVec X(data.d, 0);
            for (int k = 1; k < n; ++k) {
                IntVec term = maps[k - 1].forward.apply(u.prefix_set(k));
                for (int c = 0; c < data.d; ++c) X[c] += term[c];
            }
            if (X != data.vertex_exponent(u)) {
                rep.ok = false;
                rep.detail = "vertex formula mismatch at " + u.str();
                return rep;
            }
        }
        CheckReport sub = edge_vector_check(data, maps);
        if (!sub.ok) return sub;
        sub = two_face_check(data);
        if (!sub.ok) return sub;
        // Reconstruction from the atom vertices.
        std::map<Permutation, IntVec> atoms;
        if (data.I.d >= 1)
            for (const Permutation& u : data.I.ranks[1])
                atoms[u] = data.vertex_exponent(u);
        auto rec =
            reconstruct_from_atoms(data.I, data.vertex_exponent(v), atoms);
        for (const Permutation& u : data.I.elements())
            if (rec.at(u) != data.vertex_exponent(u)) {
                rep.ok = false;
                rep.detail = "reconstruction differs at " + u.str();
                return rep;
            }
        sub = face_lattice_vs_interval(MP, data.I);
        if (!sub.ok) return sub;
        // Minkowski identity.
        if (data.I.d >= 1) {
            LatticePolytope S = summands[0];
            for (int k = 2; k < n; ++k) S = minkowski_sum(S, summands[k - 1]);
            if (S.vertices != MP.P.vertices) {
                rep.ok = false;
                rep.detail = "Minkowski sum differs from the moment polytope";
                return rep;
            }
        }
    } catch (const MathError& e) {
        rep.ok = false;
        rep.detail = e.what();
    }
    return rep;
}

CheckReport verify_word_independence(const Permutation& v, const Permutation& w) {
    CheckReport rep;
    ReducedWord w1 = default_reduced_word(w);
    ReducedWord w2 = alternative_reduced_word(w);
    if (w1.letters == w2.letters) {
        rep.ok = false;
        rep.detail = "w has a unique reduced word";
        return rep;
    }
    MRData d1 = mr_data(v, w, w1), d2 = mr_data(v, w, w2);
    MomentPolytope P1 = moment_polytope(d1), P2 = moment_polytope(d2);
    CheckReport r1 = face_lattice_vs_interval(P1, d1.I);
    if (!r1.ok) return r1;
    CheckReport r2 = face_lattice_vs_interval(P2, d2.I);
    if (!r2.ok) return r2;
    // Both lattices are isomorphic to Int[v,w], hence to each other; check
    // the f-vectors agree as a direct corollary.
    FaceLattice L1 = face_lattice(P1.P), L2 = face_lattice(P2.P);
    if (L1.f_vector != L2.f_vector) {
        rep.ok = false;
        rep.detail = "f-vectors differ between reduced words";
        return rep;
    }
    return rep;
}

CheckReport verify_even_family(int n, int samples, uint64_t seed) {
    CheckReport rep;
    EvenFamily F = even_family(n);  // R-polynomial toricness test inside
    BruhatInterval I = interval(F.v, F.w);
    if (n <= 6) {
        if (!classify_toric(I).is_toric) {
            rep.ok = false;
            rep.detail = "classification rejected the family interval";
            return rep;
        }
    } else {
        // The quadratic Int-poset test is out of reach at this size; check
        // the lattice characterization directly instead.
        auto elems = I.elements();
        Poset P(int(elems.size()), [&](int x, int y) {
            return bruhat_leq(elems[x], elems[y]);
        });
        if (!P.check_lattice().is_lattice) {
            rep.ok = false;
            rep.detail = "family interval is not a lattice";
            return rep;
        }
    }
    WiringGraph G = build_graph(F.v, F.word, n);
    for (int k = 1; k < n; ++k) {
        Constituent C = constituent(I, k);
        if (positroid_from_graph(family_star_graph(n, k)) != C.bases) {
            rep.ok = false;
            rep.detail = "star graph positroid differs from M_" + std::to_string(k);
            return rep;
        }
        for (const auto& basis : C.bases) {
            auto lgv = flag_minor_toric(G, basis);
            if (!lgv) {
                rep.ok = false;
                rep.detail = "vanishing minor on a basis";
                return rep;
            }
            std::vector<int> full;
            for (int x = 1; x <= k; ++x) full.push_back(x);
            MRMonomial closed;
            if (basis == full) {
                closed.exponents.assign(G.params(), 0);
            } else {
                int i = 0, j = 0;
                for (int x = 1; x <= k; ++x)
                    if (!std::binary_search(basis.begin(), basis.end(), x)) i = x;
                for (int x : basis)
                    if (x > k) j = x;
                closed = even_family_minor(n, k, i, j);
            }
            if (closed.exponents != lgv->exponents) {
                rep.ok = false;
                rep.detail = "closed-form minor differs from LGV at k=" +
                             std::to_string(k);
                return rep;
            }
        }
    }
    // Affine solve at odd k: b^{(k)} is recomputed by the solver and
    // A e_{[k]} + b must return the exponent of Delta_{[k]} = 1.
    for (int k : {3, 5}) {
        if (k >= n) continue;
        Constituent C = constituent(I, k);
        std::map<std::vector<int>, IntVec> m;
        for (const auto& basis : C.bases) {
            auto mono = flag_minor_toric(G, basis);
            m[basis] = IntVec(mono->exponents.begin(), mono->exponents.end());
        }
        AffineEquivalence eq = affine_equivalence(C, m, G.params());
        std::vector<int> full;
        for (int x = 1; x <= k; ++x) full.push_back(x);
        if (eq.forward.apply(full) != IntVec(G.params(), 0)) {
            rep.ok = false;
            rep.detail = "A e_[k] + b differs from m_[k] at k=" + std::to_string(k);
            return rep;
        }
    }
    EvenFamilyReport er = even_family_structures(n, samples, seed);
    if (!er.ok) {
        rep.ok = false;
        rep.detail = er.detail;
    }
    return rep;
}

CheckReport verify_hypercube_base() {
    CheckReport rep;
    HypercubeFamily F = hypercube_perms(2);
    if (!(F.v == Permutation::from_one_line({1, 3, 2, 4}) &&
          F.w == Permutation::from_one_line({4, 2, 3, 1}))) {
        rep.ok = false;
        rep.detail = "n = 2 permutations differ from the base case";
        return rep;
    }
    BruhatInterval I = interval(F.v, F.w);
    if (I.size() != 16 || I.ranks[1].size() != 4) {
        rep.ok = false;
        rep.detail = "n = 2 interval is not a rank-4 Boolean lattice";
        return rep;
    }
    // Atom-set map gives an order isomorphism onto B_4.
    std::set<std::vector<int>> images;
    std::vector<std::pair<std::vector<int>, Permutation>> atom_sets;
    for (const Permutation& u : I.elements()) {
        std::vector<int> atoms;
        for (int a = 0; a < 4; ++a)
            if (bruhat_leq(I.ranks[1][a], u)) atoms.push_back(a);
        images.insert(atoms);
        atom_sets.emplace_back(atoms, u);
    }
    if (images.size() != 16) {
        rep.ok = false;
        rep.detail = "atom-set map is not injective";
        return rep;
    }
    for (const auto& [sa, a] : atom_sets)
        for (const auto& [sb, b] : atom_sets) {
            bool inc = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
            if (inc != bruhat_leq(a, b)) {
                rep.ok = false;
                rep.detail = "atom-set map does not preserve order";
                return rep;
            }
        }
    for (int k = 1; k < 4; ++k)
        if (hypercube_constituent(2, k).bases != constituent(I, k).bases) {
            rep.ok = false;
            rep.detail = "n = 2 constituent criterion mismatch";
            return rep;
        }
    return rep;
}

CheckReport verify_hypercube_n3(int nonmembers, uint64_t seed) {
    CheckReport rep;
    HypercubeFamily F = hypercube_perms(3);
    BruhatInterval I = interval(F.v, F.w);
    if (I.size() != 4096) {
        rep.ok = false;
        rep.detail = "n = 3 interval has " + std::to_string(I.size()) +
                     " elements, expected 4096";
        return rep;
    }
    long long binom = 1;
    for (int r = 0; r <= I.d; ++r) {
        if (int64_t(I.ranks[r].size()) != binom) {
            rep.ok = false;
            rep.detail = "rank sizes are not binomial(12, r)";
            return rep;
        }
        binom = binom * (I.d - r) / (r + 1);
    }
    // Dyadicity equals membership on the interval...
    for (const Permutation& u : I.elements())
        if (!is_dyadic(u, 3)) {
            rep.ok = false;
            rep.detail = "interval element is not dyadic: " + u.str();
            return rep;
        }
    // ... and on seeded non-members.
    std::mt19937_64 rng(seed);
    int seen = 0;
    while (seen < nonmembers) {
        Permutation u = random_perm(8, rng);
        bool member = bruhat_leq(F.v, u) && bruhat_leq(u, F.w);
        if (member) continue;
        ++seen;
        if (is_dyadic(u, 3)) {
            rep.ok = false;
            rep.detail = "non-member is dyadic: " + u.str();
            return rep;
        }
    }
    // Constituent criterion matches enumeration for all k.
    for (int k = 1; k < 8; ++k) {
        if (hypercube_constituent(3, k).bases != constituent(I, k).bases) {
            rep.ok = false;
            rep.detail = "constituent criterion mismatch at k=" + std::to_string(k);
            return rep;
        }
    }
    return rep;
}

CheckReport verify_hypercube_graphs(int n) {
    CheckReport rep;
    for (int k = 1; k < (1 << n); ++k) {
        PlabicGraph G = hypercube_graph(n, k);
        if (!is_forest(G)) {
            rep.ok = false;
            rep.detail = "hypercube graph is not a forest at k=" + std::to_string(k);
            return rep;
        }
        if (positroid_from_graph(G) != hypercube_constituent(n, k).bases) {
            rep.ok = false;
            rep.detail = "graph positroid differs from the constituent at k=" +
                         std::to_string(k);
            return rep;
        }
    }
    return rep;
}

}  // namespace toric
