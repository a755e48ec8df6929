#pragma once

#include <vector>

#include "toric/perm.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// The k-th constituent positroid of an interval: the k-subsets u[k] for
/// u in [v,w], stored as sorted lists in lex order.
struct Constituent {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> bases;

    bool has_basis(const std::vector<int>& b) const;
};

Constituent constituent(const BruhatInterval& I, int k);

/// Brute-force basis exchange: for every pair of bases A, B and a in A\B
/// there is b in B\A with A\a+b a basis.
bool verify_matroid(const Constituent& C);

struct GrassmannNecklace {
    std::vector<std::vector<int>> entries;  // I_1..I_n
};

/// Gale-minimal bases for the n cyclically shifted orders, by the greedy
/// algorithm over the explicit basis list.
GrassmannNecklace grassmann_necklace(const Constituent& C);

/// Positroid polytope conv(e_I : I in M_k) inside the hyperplane of
/// coordinate sum k in R^n.
LatticePolytope positroid_polytope(const Constituent& C);

/// The map [v,w] -> (M_1,...,M_{n-1}) is injective over all intervals of
/// S_n (exhaustive for n <= 4, seeded sample of pairs for n = 5).
bool constituents_determine_interval(int n, int sample = 0, uint64_t seed = 0);

}  // namespace toric
