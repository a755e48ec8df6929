#include "toric/plabic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace toric {

std::vector<std::vector<int>> PlabicGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (int e = 0; e < int(edges.size()); ++e) {
        adj[edges[e].first].push_back(e);
        adj[edges[e].second].push_back(e);
    }
    return adj;
}

namespace {

struct OrientationSearch {
    const PlabicGraph& G;
    const std::vector<int>& comp_edges;      // edge indices of this component
    std::vector<int> in_deg, out_deg, left;  // per vertex id
    std::vector<bool> forward;               // per edge id (global)
    std::vector<std::vector<bool>>* out;

    bool vertex_ok(int v) const {
        if (G.is_boundary(v)) return true;
        bool white = G.internal_color[v - G.n] == PlabicGraph::Color::White;
        if (white) {
            // exactly one incoming edge
            if (in_deg[v] > 1) return false;
            if (in_deg[v] + left[v] < 1) return false;
        } else {
            if (out_deg[v] > 1) return false;
            if (out_deg[v] + left[v] < 1) return false;
        }
        return true;
    }

    bool vertex_final_ok(int v) const {
        if (G.is_boundary(v)) return true;
        bool white = G.internal_color[v - G.n] == PlabicGraph::Color::White;
        return white ? in_deg[v] == 1 : out_deg[v] == 1;
    }

    void rec(size_t idx) {
        if (idx == comp_edges.size()) {
            out->push_back(forward);
            return;
        }
        int e = comp_edges[idx];
        auto [a, b] = G.edges[e];
        for (bool dir : {true, false}) {
            int from = dir ? a : b, to = dir ? b : a;
            ++out_deg[from];
            ++in_deg[to];
            --left[a];
            --left[b];
            forward[e] = dir;
            if (vertex_ok(a) && vertex_ok(b) &&
                (left[a] > 0 || vertex_final_ok(a)) &&
                (left[b] > 0 || vertex_final_ok(b)))
                rec(idx + 1);
            --out_deg[from];
            --in_deg[to];
            ++left[a];
            ++left[b];
        }
    }
};

}  // namespace

std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G) {
    int V = G.vertex_count();
    // Connected components over edges.
    std::vector<int> comp(V, -1);
    int ncomp = 0;
    auto adj = G.adjacency();
    for (int s = 0; s < V; ++s) {
        if (comp[s] >= 0 || adj[s].empty()) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : adj[v]) {
                int u = G.edges[e].first == v ? G.edges[e].second : G.edges[e].first;
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> comp_edges(ncomp);
    for (int e = 0; e < int(G.edges.size()); ++e)
        comp_edges[comp[G.edges[e].first]].push_back(e);

    // Enumerate per component.
    std::vector<std::vector<std::vector<bool>>> per_comp(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        OrientationSearch s{G, comp_edges[c], {}, {}, {}, {}, &per_comp[c]};
        s.in_deg.assign(V, 0);
        s.out_deg.assign(V, 0);
        s.left.assign(V, 0);
        for (int e : comp_edges[c]) {
            ++s.left[G.edges[e].first];
            ++s.left[G.edges[e].second];
        }
        s.forward.assign(G.edges.size(), false);
        s.rec(0);
    }

    // Internal vertices with no edges can never satisfy their constraint.
    for (int v = G.n; v < V; ++v)
        if (adj[v].empty()) return {};

    // Product assembly.
    std::vector<PerfectOrientation> out;
    std::vector<size_t> pick(ncomp, 0);
    while (true) {
        PerfectOrientation po;
        po.forward.assign(G.edges.size(), false);
        for (int c = 0; c < ncomp; ++c) {
            if (per_comp[c].empty()) return {};
            for (int e : comp_edges[c]) po.forward[e] = per_comp[c][pick[c]][e];
        }
        for (int b = 0; b < G.n; ++b) {
            if (adj[b].empty()) continue;
            int e = adj[b][0];
            bool away = (G.edges[e].first == b) ? po.forward[e] : !po.forward[e];
            if (away) po.source_set.push_back(b + 1);
        }
        out.push_back(std::move(po));
        int c = ncomp - 1;
        while (c >= 0 && ++pick[c] == per_comp[c].size()) {
            pick[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

std::vector<std::vector<int>> positroid_from_graph(const PlabicGraph& G) {
    std::set<std::vector<int>> sets;
    int rank = -1;
    for (const PerfectOrientation& po : perfect_orientations(G)) {
        if (rank < 0) rank = int(po.source_set.size());
        if (rank != int(po.source_set.size()))
            throw MixedRank("positroid_from_graph: source sets of mixed size");
        sets.insert(po.source_set);
    }
    return {sets.begin(), sets.end()};
}

bool is_forest(const PlabicGraph& G) {
    std::vector<int> parent(G.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : G.edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

PlabicGraph family_star_graph(int n, int k) {
    if (n % 2 != 0 || k < 1 || k >= n)
        throw MathError("family_star_graph: need n even and 1 <= k <= n-1");
    PlabicGraph G;
    G.n = n;
    int white = G.add_internal(PlabicGraph::Color::White);
    int black = G.add_internal(PlabicGraph::Color::Black);
    for (int i = 1; i <= k; ++i) G.edges.emplace_back(black, i - 1);
    for (int i = k + 1; i <= n; ++i) G.edges.emplace_back(white, i - 1);
    if (k % 2 == 1) G.edges.emplace_back(white, black);
    return G;
}

namespace {

PlabicGraph star_graph(int leaves, PlabicGraph::Color center) {
    PlabicGraph G;
    G.n = leaves;
    int c = G.add_internal(center);
    for (int i = 0; i < leaves; ++i) G.edges.emplace_back(c, i);
    return G;
}

void swap_colors(PlabicGraph& G) {
    for (auto& c : G.internal_color)
        c = (c == PlabicGraph::Color::White) ? PlabicGraph::Color::Black
                                             : PlabicGraph::Color::White;
}

/// Insert src into dest with boundary label i of src becoming boundary label
/// i + offset of dest. dest.n must already cover the shifted labels.
void embed(PlabicGraph& dest, const PlabicGraph& src, int offset) {
    int base = dest.vertex_count();
    for (auto c : src.internal_color) dest.internal_color.push_back(c);
    auto remap = [&](int vid) {
        return src.is_boundary(vid) ? vid + offset : vid - src.n + base;
    };
    for (const auto& [a, b] : src.edges) dest.edges.emplace_back(remap(a), remap(b));
}

}  // namespace

PlabicGraph hypercube_graph(int n, int k) {
    int N = 1 << n;
    if (k < 1 || k >= N) throw MathError("hypercube_graph: need 1 <= k <= 2^n - 1");
    int l = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++l;
    }
    if (l > 0) {
        // Disjoint union of 2^l copies on the basic (n-l)-intervals.
        PlabicGraph G;
        G.n = N;
        PlabicGraph sub = hypercube_graph(n - l, k);
        for (int c = 0; c < (1 << l); ++c) embed(G, sub, c * (1 << (n - l)));
        return G;
    }
    if (k == 1) return star_graph(N, PlabicGraph::Color::White);
    int L = 0;
    while ((1 << L) < k) ++L;  // 2^{L-1} < k < 2^L for odd k > 1
    if (L == n) {
        PlabicGraph G = hypercube_graph(n, N - k);
        swap_colors(G);
        return G;
    }
    // Lift G_k(L): its boundary vertices turn white and sprout 2^{n-L} legs
    // onto the corresponding basic (n-L)-interval.
    PlabicGraph H = hypercube_graph(L, k);
    PlabicGraph G;
    G.n = N;
    int legs = 1 << (n - L);
    // Former boundary vertices of H, in order, become internal whites.
    std::vector<int> lifted;
    for (int c = 0; c < H.n; ++c)
        lifted.push_back(G.add_internal(PlabicGraph::Color::White));
    int base = G.vertex_count();
    for (auto c : H.internal_color) G.internal_color.push_back(c);
    auto remap = [&](int vid) {
        return H.is_boundary(vid) ? lifted[vid] : vid - H.n + base;
    };
    for (const auto& [a, b] : H.edges) G.edges.emplace_back(remap(a), remap(b));
    for (int c = 0; c < H.n; ++c)
        for (int i = 0; i < legs; ++i)
            G.edges.emplace_back(lifted[c], c * legs + i);
    return G;
}

}  // namespace toric
