#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/classify.hpp"
#include "toric/families.hpp"
#include "toric/moment.hpp"

namespace toric {

/// Verification pipelines shared by the command line and the acceptance
/// suite. Every function returns ok/detail instead of asserting, so the
/// CLI can report counterexamples with exit status 1.

struct ClassificationStats {
    bool ok = true;
    std::string detail;
    int checked = 0;
    int toric = 0;
};

/// Classification sweep: the four equivalent tests agree on every
/// interval; toricness is inherited by subintervals of toric intervals.
ClassificationStats verify_classification_exhaustive(int n);
ClassificationStats verify_classification_sampled(int n, int count, uint64_t seed);

std::vector<std::pair<Permutation, Permutation>> toric_intervals_sn(int n);
std::vector<std::pair<Permutation, Permutation>> sample_toric_intervals(
    int n, int count, uint64_t seed);

/// LGV soundness on one interval: LGV expansions equal symbolic minors for
/// every subset, supports equal constituents, expansions have distinct
/// terms, and toric minors are unique squarefree monic monomials.
CheckReport verify_lgv(const Permutation& v, const Permutation& w, bool toric);

/// Incidence Pluecker relations vanish symbolically on the two worked
/// matrices (all admissible I, J).
CheckReport verify_incidence_plucker_examples();

/// Full structure suite on one toric interval: affine equivalences,
/// vertex formula, edge and 2-face identities, reconstruction, face
/// lattice versus the subinterval poset, and the Minkowski identity.
CheckReport verify_structure(const Permutation& v, const Permutation& w,
                             const std::optional<ReducedWord>& word = std::nullopt);

/// Two structurally different reduced words give moment polytopes with the
/// same face-lattice relationship to the interval.
CheckReport verify_word_independence(const Permutation& v, const Permutation& w);

/// Even family: closed-form minors equal LGV on every constituent basis,
/// star graphs give the constituents, polytope types, z-relations.
CheckReport verify_even_family(int n, int samples, uint64_t seed);

/// Hypercube family: the n = 2 interval is Boolean and equals the base
/// case; dyadicity criterion; constituent criterion; graph positroids.
CheckReport verify_hypercube_base();
CheckReport verify_hypercube_n3(int nonmembers, uint64_t seed);
CheckReport verify_hypercube_graphs(int n);

}  // namespace toric
