#pragma once

#include <optional>
#include <vector>

#include "toric/bits.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// Exact polytope with vertex and facet descriptions. Lower-dimensional
/// polytopes carry their affine-hull equations explicitly; facet
/// inequalities are stated in the ambient space and are tight on the facet.
struct LatticePolytope {
    int ambient = 0;
    int dim = 0;  // affine dimension
    std::vector<RatVec> vertices;  // extreme points, lex-sorted

    struct Facet {
        IntVec normal;   // primitive integer; normal . x <= offset on P
        Rat offset;      // integral whenever the vertices are integral
        IntVec reduced;  // the same functional in affine-hull coordinates
        Bits incidence;  // tight vertices
    };
    std::vector<Facet> facets;
    std::vector<std::pair<IntVec, Rat>> equations;  // normal . x == value

    bool contains(const RatVec& p) const;
    int vertex_index(const RatVec& p) const;  // -1 when p is not a vertex

    /// Smallest face containing the vertex subset S: the intersection of all
    /// facets containing S (the whole polytope when no facet does).
    Bits smallest_face(const Bits& S) const;
    /// Affine dimension of a set of vertices (-1 for the empty set).
    int face_dim(const Bits& S) const;
};

/// Exact convex hull. Degenerate inputs yield lower-dimensional polytopes
/// described inside their affine hull.
LatticePolytope hull(const std::vector<RatVec>& points);

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

/// All faces of P (dimensions 0..dim(P), the polytope included; the empty
/// face is implicit). Gated by size; the gates can be widened by callers.
struct FaceLattice {
    std::vector<Bits> faces;   // sorted by (dim, vertex set)
    std::vector<int> dims;     // parallel to faces
    std::vector<int> f_vector; // f_vector[d] = number of d-faces

    std::vector<std::pair<int, int>> edges() const;  // vertex index pairs
    int face_index(const Bits& S) const;             // -1 when S is no face
};

FaceLattice face_lattice(const LatticePolytope& P, int dim_gate = 8,
                         int vertex_gate = 64);

/// f-vectors of reference polytopes, used for combinatorial-type checks.
std::vector<long long> simplex_f_vector(int dim);
std::vector<long long> product_f_vector(const std::vector<long long>& a,
                                        const std::vector<long long>& b);
std::vector<long long> pyramid_f_vector(const std::vector<long long>& f);

}  // namespace toric
