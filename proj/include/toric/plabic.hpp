#pragma once

#include <vector>

#include "toric/numbers.hpp"

namespace toric {

/// Plabic graph in a disk: boundary vertices 1..n (degree-1 leaves, drawn
/// clockwise) and colored internal vertices. Vertex ids: 0..n-1 are the
/// boundary labels 1..n; internal vertices follow.
struct PlabicGraph {
    enum class Color { Black, White };

    int n = 0;                                // boundary leaves
    std::vector<Color> internal_color;        // per internal vertex
    std::vector<std::pair<int, int>> edges;   // vertex ids

    int internal_count() const { return int(internal_color.size()); }
    int vertex_count() const { return n + internal_count(); }
    bool is_boundary(int vid) const { return vid < n; }
    int add_internal(Color c) {
        internal_color.push_back(c);
        return n + internal_count() - 1;
    }
    std::vector<std::vector<int>> adjacency() const;  // edge indices per vertex
};

struct PerfectOrientation {
    /// forward[e] means edges[e] is directed first -> second.
    std::vector<bool> forward;
    std::vector<int> source_set;  // boundary labels that are sources, sorted
};

/// All perfect orientations: each white internal vertex has exactly one
/// incoming edge, each black internal vertex exactly one outgoing edge.
/// Enumerated per connected component and assembled as a product, in a
/// deterministic order.
std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G);

/// Source sets of all perfect orientations (sorted, no duplicates). Throws
/// MixedRank if source sets of different sizes appear.
std::vector<std::vector<int>> positroid_from_graph(const PlabicGraph& G);

bool is_forest(const PlabicGraph& G);

/// The two-star plabic graph of the even family: a white vertex joined to
/// boundary k+1..n, a black vertex joined to boundary 1..k, and an internal
/// white-black edge exactly when k is odd.
PlabicGraph family_star_graph(int n, int k);

/// The recursive plabic graph for the hypercube interval constituents,
/// on boundary [2^n], 1 <= k <= 2^n - 1.
PlabicGraph hypercube_graph(int n, int k);

}  // namespace toric
