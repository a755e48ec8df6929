#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/mrgraph.hpp"
#include "toric/perm.hpp"
#include "toric/polytope.hpp"
#include "toric/positroid.hpp"

namespace toric {

/// Everything attached to a toric interval and a fixed reduced word: the
/// wiring graph and the exponent vectors m_I of all nonzero flag minors,
/// in MR coordinates (m_{v[k]} = 0, all exponents in {0,1}).
struct MRData {
    BruhatInterval I;
    WiringGraph G;
    int d = 0;  // number of MR parameters

    /// minors[k-1]: basis -> exponent vector, for k = 1..n-1.
    std::vector<std::map<std::vector<int>, IntVec>> minors;

    const IntVec& m(const std::vector<int>& basis, int k) const;
    /// X_u = sum_k m_{u[k]}.
    IntVec vertex_exponent(const Permutation& u) const;
};

/// Builds MRData; toricness is certified by the R-polynomial criterion
/// (coefficient of q^{d-1} equal to -d) and throws NotToric otherwise.
MRData mr_data(const Permutation& v, const Permutation& w,
               const std::optional<ReducedWord>& word = std::nullopt);

/// The k-th summand polytope conv(m_I : I in M_k), with the postconditions
/// checked: every m_I is a vertex, the polytope sits in [0,1]^d, and the
/// origin is a vertex.
LatticePolytope summand_polytope(const MRData& data, int k);

struct MomentPolytope {
    LatticePolytope P;
    std::vector<Permutation> label;  // per vertex index
    int vertex_of(const Permutation& u) const;
};

/// Moment polytope with vertices X_u labeled by the interval elements.
MomentPolytope moment_polytope(const MRData& data);

struct CheckReport {
    bool ok = true;
    std::string detail;  // first violation
};

/// Face lattice versus the subinterval poset: (i) every subinterval spans a
/// face of the right dimension, (ii) face counts per dimension equal
/// subinterval counts per length, (iii) the 1-skeleton is the Hasse diagram.
CheckReport face_lattice_vs_interval(const MomentPolytope& MP,
                                     const BruhatInterval& I,
                                     int dim_gate = 8, int vertex_gate = 64);

struct AffineMap {
    IntMat A;  // d x n
    IntVec b;  // d
    IntVec apply(const std::vector<int>& subset) const;  // A e_I + b
    IntVec column(int i) const;                          // a_i (1-indexed)
};

struct AffineEquivalence {
    AffineMap forward;  // A e_I + b = m_I
    IntMat C;           // n x d left inverse: C m_I + dvec = e_I
    IntVec dvec;
};

/// Integer affine equivalence between the positroid polytope and the k-th
/// summand; throws NoSolution when no integer solution exists (which would
/// contradict the toricness of the interval).
AffineEquivalence affine_equivalence(const Constituent& C,
                                     const std::map<std::vector<int>, IntVec>& m,
                                     int d);

/// Edge identities on every cover edge: the exchange difference
/// m_{u'[k]} - m_{u[k]} is constant over i <= k < j, the full edge vector is
/// (j-i) times it, every coordinate is divisible by j-i, and the a-vector
/// form holds for the solved affine maps.
CheckReport edge_vector_check(const MRData& data,
                              const std::vector<AffineEquivalence>& maps);

/// Parallelogram/trapezoid relations on every rank-2 subinterval.
CheckReport two_face_check(const MRData& data);

/// Rank-by-rank reconstruction of all vertices from X_v and the atom
/// vertices, using the 2-face relations; throws InconsistentFace when two
/// diamonds disagree.
std::map<Permutation, IntVec> reconstruct_from_atoms(
    const BruhatInterval& I, const IntVec& Xv,
    const std::map<Permutation, IntVec>& atoms);

/// The Bruhat interval polytope conv(u . (n-1, ..., 1, 0) : u in [v,w]).
LatticePolytope bruhat_interval_polytope(const BruhatInterval& I);

}  // namespace toric
