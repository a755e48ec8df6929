#pragma once

#include <optional>
#include <utility>

#include "toric/perm.hpp"
#include "toric/poset.hpp"

namespace toric {

/// True iff I is a 2-crown: the Bruhat order of S_3, i.e. rank 3 with 6
/// elements, 2 atoms, 2 coatoms, and every atom below every coatom.
bool is_two_crown(const BruhatInterval& I);

/// First (lex) length-3 subinterval of I that is a 2-crown.
std::optional<std::pair<Permutation, Permutation>> has_two_crown_subinterval(
    const BruhatInterval& I);

struct ToricVerdict {
    bool is_toric = false;
    bool by_two_crown = false;
    bool by_lattice = false;
    bool by_interval_poset_lattice = false;
    bool by_r_poly = false;
    bool is_hypercube = false;  // informational: |I| = 2^d with binomial ranks
    std::optional<std::pair<Permutation, Permutation>> crown_witness;
    std::optional<std::pair<Permutation, Permutation>> lattice_witness;
};

/// Runs the four equivalent toricness tests and asserts their agreement;
/// throws DisagreementBug if they ever differ.
ToricVerdict classify_toric(const Permutation& v, const Permutation& w);
ToricVerdict classify_toric(const BruhatInterval& I);

}  // namespace toric
