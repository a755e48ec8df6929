#include "toric/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace toric {

namespace {

Json rat_to_json(const Rat& q) {
    if (is_integer(q)) {
        Int z = num(q);
        if (z >= std::numeric_limits<long long>::min() &&
            z <= std::numeric_limits<long long>::max())
            return Json(static_cast<long long>(z));
    }
    return Json(rat_str(q));
}

Json int_to_json(const Int& z) { return rat_to_json(Rat(z)); }

Json vec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}

Json ivec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

}  // namespace

Json to_json(const Permutation& p) {
    Json a = Json::array();
    for (int x : p.one_line()) a.push_back(x);
    return a;
}

Permutation permutation_from_json(const Json& j) {
    std::vector<int> w;
    for (const auto& x : j) w.push_back(x.get<int>());
    return Permutation::from_one_line(w);
}

Json to_json(const BruhatInterval& I) {
    Json j;
    j["v"] = to_json(I.v);
    j["w"] = to_json(I.w);
    Json ranks = Json::array();
    for (const auto& r : I.ranks) {
        Json level = Json::array();
        for (const Permutation& u : r) level.push_back(to_json(u));
        ranks.push_back(level);
    }
    j["ranks"] = ranks;
    Json covers = Json::array();
    for (const CoverEdge& e : I.covers) {
        Json c;
        c["lower"] = to_json(e.lower);
        c["upper"] = to_json(e.upper);
        c["i"] = e.i;
        c["j"] = e.j;
        covers.push_back(c);
    }
    j["covers"] = covers;
    return j;
}

BruhatInterval interval_from_json(const Json& j) {
    return interval(permutation_from_json(j.at("v")),
                    permutation_from_json(j.at("w")));
}

Json to_json(const ToricVerdict& t, const Permutation& v, const Permutation& w) {
    Json j;
    j["v"] = to_json(v);
    j["w"] = to_json(w);
    j["is_toric"] = t.is_toric;
    j["by_two_crown"] = t.by_two_crown;
    j["by_lattice"] = t.by_lattice;
    j["by_interval_poset_lattice"] = t.by_interval_poset_lattice;
    j["by_r_poly"] = t.by_r_poly;
    j["is_hypercube"] = t.is_hypercube;
    if (t.crown_witness) {
        j["crown_witness"] = Json::array(
            {to_json(t.crown_witness->first), to_json(t.crown_witness->second)});
    }
    if (t.lattice_witness) {
        j["lattice_witness"] = Json::array({to_json(t.lattice_witness->first),
                                            to_json(t.lattice_witness->second)});
    }
    return j;
}

Json minor_to_json(const WiringGraph& G, const std::vector<int>& I) {
    Json j;
    j["I"] = Json(I);
    Json terms = Json::array();
    auto names = G.param_names();
    for (const MRMonomial& m : flag_minor(G, I)) {
        Json t;
        t["sign"] = m.sign;
        Json exp;
        for (size_t c = 0; c < m.exponents.size(); ++c)
            if (m.exponents[c]) exp[names[c]] = m.exponents[c];
        t["exp"] = exp.is_null() ? Json::object() : exp;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

Json to_json(const Constituent& C) {
    Json j;
    j["k"] = C.k;
    Json bases = Json::array();
    for (const auto& b : C.bases) bases.push_back(Json(b));
    j["bases"] = bases;
    return j;
}

Json to_json(const GrassmannNecklace& N) {
    Json a = Json::array();
    for (const auto& e : N.entries) a.push_back(Json(e));
    return a;
}

Json to_json(const LatticePolytope& P, const FaceLattice* L) {
    Json j;
    Json verts = Json::array();
    for (const RatVec& v : P.vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    Json facets = Json::array();
    for (const auto& f : P.facets) {
        Json fj;
        fj["normal"] = ivec_to_json(f.normal);
        fj["offset"] = rat_to_json(f.offset);
        facets.push_back(fj);
    }
    j["facets"] = facets;
    Json eqs = Json::array();
    for (const auto& [normal, value] : P.equations) {
        Json ej;
        ej["normal"] = ivec_to_json(normal);
        ej["value"] = rat_to_json(value);
        eqs.push_back(ej);
    }
    j["equations"] = eqs;
    j["dim"] = P.dim;
    if (L) {
        Json faces = Json::array();
        for (const Bits& F : L->faces) faces.push_back(Json(F.to_indices()));
        j["faces"] = faces;
        j["f_vector"] = Json(L->f_vector);
    }
    return j;
}

Json plabic_to_json(const PlabicGraph& G) {
    Json j;
    j["n"] = G.n;
    Json internals = Json::array();
    for (auto c : G.internal_color)
        internals.push_back(c == PlabicGraph::Color::White ? "white" : "black");
    j["internal"] = internals;
    Json edges = Json::array();
    for (const auto& [a, b] : G.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

std::string dot_hasse(const BruhatInterval& I) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (const auto& level : I.ranks) {
        os << "  { rank=same;";
        for (const Permutation& u : level) os << " \"" << u.str() << "\";";
        os << " }\n";
    }
    for (const CoverEdge& e : I.covers)
        os << "  \"" << e.lower.str() << "\" -> \"" << e.upper.str()
           << "\" [label=\"(" << e.i << "," << e.j << ")\"];\n";
    os << "}\n";
    return os.str();
}

std::string dot_plabic(const PlabicGraph& G) {
    std::ostringstream os;
    os << "graph plabic {\n  layout=neato;\n";
    for (int b = 0; b < G.n; ++b) {
        double ang = 2.0 * 3.14159265358979 * b / G.n;
        os << "  b" << b + 1 << " [label=\"" << b + 1
           << "\", shape=plaintext, pos=\"" << 4.0 * std::cos(ang) << ","
           << 4.0 * std::sin(ang) << "!\"];\n";
    }
    for (int i = 0; i < G.internal_count(); ++i) {
        bool white = G.internal_color[i] == PlabicGraph::Color::White;
        os << "  i" << i << " [label=\"\", shape=circle, style=filled, fillcolor="
           << (white ? "white" : "black") << "];\n";
    }
    auto name = [&](int vid) {
        std::ostringstream s;
        if (G.is_boundary(vid)) s << "b" << vid + 1;
        else s << "i" << vid - G.n;
        return s.str();
    };
    for (const auto& [a, b] : G.edges)
        os << "  " << name(a) << " -- " << name(b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_wiring(const WiringGraph& G) {
    std::ostringstream os;
    os << "digraph wiring {\n  layout=neato;\n  node [shape=point];\n";
    auto port = [](int col, int h) {
        std::ostringstream s;
        s << "p" << col << "_" << h;
        return s.str();
    };
    for (int col = 0; col <= G.ell(); ++col)
        for (int h = 1; h <= G.n; ++h)
            os << "  " << port(col, h) << " [pos=\"" << col << "," << h
               << "!\"];\n";
    for (int h = 1; h <= G.n; ++h) {
        os << "  l" << h << " [shape=plaintext, label=\"" << h << "\", pos=\"-0.6,"
           << h << "!\"];\n";
        os << "  r" << h << " [shape=plaintext, label=\"" << h << "\", pos=\""
           << G.ell() + 0.6 << "," << h << "!\"];\n";
    }
    for (int j = 1; j <= G.ell(); ++j) {
        int a = G.chips[j - 1].wire;
        for (int h = 1; h <= G.n; ++h) {
            if (G.chips[j - 1].is_bridge || (h != a && h != a + 1)) {
                os << "  " << port(j - 1, h) << " -> " << port(j, h)
                   << " [arrowhead=none];\n";
            }
        }
        if (G.chips[j - 1].is_bridge) {
            os << "  " << port(j - 1, a + 1) << " -> " << port(j, a)
               << " [label=\"t" << j << "\", constraint=false];\n";
        } else {
            os << "  " << port(j - 1, a) << " -> " << port(j, a + 1)
               << " [label=\"-1\", arrowhead=none];\n";
            os << "  " << port(j - 1, a + 1) << " -> " << port(j, a)
               << " [arrowhead=none];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string off_polytope(const LatticePolytope& P) {
    if (P.dim != 3)
        throw MathError("off_polytope: only 3-dimensional polytopes");
    // Order the vertices of each facet cyclically inside its plane.
    std::ostringstream os;
    os << "OFF\n"
       << P.vertices.size() << " " << P.facets.size() << " "
       << P.facets.size() + int(P.vertices.size()) - 2 << "\n";
    for (const RatVec& v : P.vertices) {
        // Pad or truncate to 3 coordinates using the first three axes; the
        // polytope may sit in a higher ambient space with equations.
        for (int c = 0; c < 3; ++c) {
            if (c) os << " ";
            Rat x = c < int(v.size()) ? v[c] : Rat(0);
            os << double(num(x)) / double(den(x));
        }
        os << "\n";
    }
    for (const auto& f : P.facets) {
        std::vector<int> ids = f.incidence.to_indices();
        // Centroid of the face, then sort by exact angular order in 2D
        // coordinates spanned by the first two independent edge directions.
        int m = int(ids.size());
        RatVec cen(P.ambient, Rat(0));
        for (int id : ids)
            for (int c = 0; c < P.ambient; ++c) cen[c] += P.vertices[id][c];
        for (Rat& x : cen) x /= m;
        RatMat dirs;
        for (int id : ids) {
            RatVec d(P.ambient);
            for (int c = 0; c < P.ambient; ++c) d[c] = P.vertices[id][c] - cen[c];
            dirs.push_back(std::move(d));
        }
        // Orthogonal-free 2D coordinates: project onto two independent rows.
        RatMat basis;
        for (const RatVec& d : dirs) {
            RatMat test = basis;
            test.push_back(d);
            if (rank(test) > int(basis.size())) basis.push_back(d);
            if (basis.size() == 2) break;
        }
        auto coord = [&](int t) {
            Rat a = 0, b = 0;
            for (int c = 0; c < P.ambient; ++c) {
                a += dirs[t][c] * basis[0][c];
                b += dirs[t][c] * basis[1][c];
            }
            return std::make_pair(a, b);
        };
        std::vector<int> order(m);
        for (int t = 0; t < m; ++t) order[t] = t;
        auto half = [&](int t) {
            auto [a, b] = coord(t);
            return (b < 0 || (b == 0 && a < 0)) ? 1 : 0;
        };
        std::sort(order.begin(), order.end(), [&](int s, int t) {
            if (half(s) != half(t)) return half(s) < half(t);
            auto [as, bs] = coord(s);
            auto [at, bt] = coord(t);
            return as * bt - bs * at > 0;
        });
        os << m;
        for (int t : order) os << " " << ids[t];
        os << "\n";
    }
    return os.str();
}

}  // namespace toric
