#pragma once

#include <optional>
#include <vector>

#include "toric/perm.hpp"
#include "toric/polynomial.hpp"

namespace toric {

struct ReducedWord {
    std::vector<int> letters;  // simple reflection indices i_1..i_l

    int size() const { return int(letters.size()); }
    Permutation product(int n) const {
        Permutation u(n);
        for (int i : letters) u = u.right_mult_s(i);
        return u;
    }
};

/// Deterministic reduced word for w: repeatedly move the largest misplaced
/// value to its home position. For w = (1 n) this yields the staircase word
/// s_1 s_2 ... s_{n-1} ... s_2 s_1.
ReducedWord default_reduced_word(const Permutation& w);

/// A structurally different reduced word for w (left-greedy peeling), used
/// to test independence of the combinatorial type from the word. Falls back
/// to the default word when w has a unique reduced word.
ReducedWord alternative_reduced_word(const Permutation& w);

struct Pds {
    std::vector<int> jplus;  // 1-based positions used by the rightmost
                             // reduced subexpression for v
    std::vector<int> jcirc;  // complement in [l]
};

/// Positive distinguished subexpression of v inside the word: scan from the
/// right, taking a letter whenever it shortens the residual. Throws
/// NonemptyIntervalRequired when the residual fails to reach the identity
/// (i.e. v is not below the word's product).
Pds pds(const Permutation& v, const ReducedWord& word);

/// Wiring diagram of bridge and crossing chips for the pair (v, word).
/// Wires run left to right at heights 1..n; chip j acts on heights
/// (wire, wire+1). A bridge carries the parameter t_j on a downward edge
/// whose white endpoint sits on the upper wire; a crossing swaps the two
/// strands, with weight -1 on the ascending strand.
struct WiringGraph {
    int n = 0;
    Permutation v, w;
    ReducedWord word;
    struct Chip {
        int wire;        // i_j
        bool is_bridge;  // true iff the position lies in J^circ
    };
    std::vector<Chip> chips;     // by position 1..l
    std::vector<int> jcirc;      // bridge positions in increasing order
    std::vector<int> var_index;  // position (1-based) -> index into jcirc, or -1

    int ell() const { return int(chips.size()); }
    int params() const { return int(jcirc.size()); }
    /// Variable names t_j for printing, in jcirc order.
    std::vector<std::string> param_names() const;
};

WiringGraph build_graph(const Permutation& v, const ReducedWord& word, int n);

struct PathCollection {
    std::vector<int> sources;            // sorted k-subset of left labels
    std::vector<int> sinks;              // 1..k
    std::vector<std::vector<int>> paths; // heights at columns 0..l, per source
    std::vector<int> bridges_used;       // chip positions, increasing
    int sign = 1;                        // sign of the source-to-sink matching
};

/// All vertex-disjoint path collections from sources I (left boundary) to
/// sinks 1..|I| (right boundary), in a deterministic order.
std::vector<PathCollection> ni_path_collections(const WiringGraph& G,
                                                const std::vector<int>& I);

struct MRMonomial {
    std::vector<int> exponents;  // indexed by jcirc order
    int sign = 1;                // full coefficient sign of the LGV term

    bool squarefree() const {
        for (int e : exponents)
            if (e < 0 || e > 1) return false;
        return true;
    }
};

/// LGV expansion of the flag minor for rows I: one signed monomial per NI
/// path collection. No two exponent vectors coincide.
std::vector<MRMonomial> flag_minor(const WiringGraph& G, const std::vector<int>& I);

/// The unique monomial of a toric graph's flag minor, or nullopt when the
/// minor vanishes. Throws MultipleCollections when more than one collection
/// exists (the interval was not toric).
std::optional<MRMonomial> flag_minor_toric(const WiringGraph& G,
                                           const std::vector<int>& I);

/// The MR matrix as an n x n matrix of polynomials in the bridge parameters,
/// computed by multiplying the chip matrices.
std::vector<std::vector<Poly>> symbolic_matrix(const WiringGraph& G);

/// Flag minor of a polynomial matrix: rows I, first |I| columns, by Laplace
/// expansion (subset dynamic program; no division).
Poly matrix_flag_minor(const std::vector<std::vector<Poly>>& M,
                       const std::vector<int>& I);

/// The sum of signed LGV terms as a polynomial, for comparison against
/// matrix_flag_minor.
Poly lgv_polynomial(const WiringGraph& G, const std::vector<int>& I);

/// Incidence Pluecker sum E_{I,J} evaluated on symbolic flag minors of M;
/// identically zero for matrices representing flags.
Poly incidence_plucker(const std::vector<std::vector<Poly>>& M,
                       const std::vector<int>& I, const std::vector<int>& J);

}  // namespace toric
