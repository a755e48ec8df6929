#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

int affine_rank(const std::vector<RatVec>& pts, const std::vector<int>& idx) {
    if (idx.empty()) return -1;
    RatMat D;
    for (size_t t = 1; t < idx.size(); ++t) {
        RatVec d(pts[idx[0]].size());
        for (size_t c = 0; c < d.size(); ++c)
            d[c] = pts[idx[t]][c] - pts[idx[0]][c];
        D.push_back(std::move(d));
    }
    return D.empty() ? 0 : rank(std::move(D));
}

/// Extreme rays of the cone {y : y . c_i >= 0} by double description with
/// the combinatorial adjacency test. Constraints are integer vectors that
/// positively span the space, so the cone is pointed.
struct DualCone {
    int dim;                         // r + 1
    std::vector<IntVec> rays;        // primitive integer
    std::vector<Bits> zero;          // tight constraints per ray
    int processed = 0;

    static Int dot(const IntVec& a, const IntVec& b) {
        Int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    void insert(const IntVec& c) {
        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(rays[i], c);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) zero[i].set(processed);
            ++processed;
            return;
        }
        std::vector<IntVec> next;
        std::vector<Bits> next_zero;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            Bits z = zero[i];
            if (val[i] == 0) z.set(processed);
            next.push_back(rays[i]);
            next_zero.push_back(std::move(z));
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                Bits common = zero[p] & zero[q];
                bool adjacent = true;
                for (size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    if (common.is_subset_of(zero[o])) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec ray(c.size());
                for (size_t t = 0; t < c.size(); ++t)
                    ray[t] = val[p] * rays[q][t] - val[q] * rays[p][t];
                ray = primitive(std::move(ray));
                Bits z = common;
                z.set(processed);
                next.push_back(std::move(ray));
                next_zero.push_back(std::move(z));
            }
        }
        rays = std::move(next);
        zero = std::move(next_zero);
        ++processed;
    }
};

}  // namespace

LatticePolytope hull(const std::vector<RatVec>& points) {
    if (points.empty()) throw MathError("hull: no points");
    int n = int(points[0].size());
    std::vector<RatVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.ambient = n;
    const RatVec& p0 = pts[0];

    // Integerized difference vectors span the direction space.
    IntMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec d(n);
        for (int c = 0; c < n; ++c) d[c] = pts[i][c] - p0[c];
        diffs.push_back(primitive_integer(d));
    }
    IntMat sat = diffs.empty() ? IntMat{} : saturation_basis(diffs);
    int r = int(sat.size());
    P.dim = r;

    // Affine-hull equations: primitive integer kernel of the direction space.
    {
        RatMat S;
        for (const auto& row : sat) S.emplace_back(row.begin(), row.end());
        RatMat kernel;
        if (r == 0) {
            kernel.assign(n, RatVec(n, Rat(0)));
            for (int i = 0; i < n; ++i) kernel[i][i] = 1;
        } else {
            kernel = nullspace(S);
        }
        for (const auto& k : kernel) {
            IntVec normal = primitive_integer(k);
            int lead = -1;
            for (size_t t = 0; t < normal.size(); ++t)
                if (normal[t] != 0) {
                    lead = int(t);
                    break;
                }
            if (lead >= 0 && normal[lead] < 0)
                for (Int& x : normal) x = -x;
            Rat value = 0;
            for (int c = 0; c < n; ++c) value += Rat(normal[c]) * p0[c];
            P.equations.emplace_back(std::move(normal), value);
        }
        std::sort(P.equations.begin(), P.equations.end());
    }

    if (r == 0) {
        P.vertices = pts;
        return P;
    }

    // Coordinates inside the affine hull: xi(p) = M^{-1} sat (p - p0) with
    // M = sat sat^T. For integer inputs these are integers because sat is a
    // basis of the saturated lattice.
    RatMat satQ(r, RatVec(n));
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < n; ++c) satQ[i][c] = Rat(sat[i][c]);
    RatMat M(r, RatVec(r, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < n; ++c) M[i][j] += satQ[i][c] * satQ[j][c];
    RatMat Minv = inverse(M);

    auto reduce_point = [&](const RatVec& p) {
        RatVec d(n);
        for (int c = 0; c < n; ++c) d[c] = p[c] - p0[c];
        return mat_vec(Minv, mat_vec(satQ, d));
    };
    std::vector<RatVec> xi(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) xi[i] = reduce_point(pts[i]);

    // Homogenized integer constraints (1, xi_i).
    std::vector<IntVec> cons(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        RatVec h(r + 1);
        h[0] = 1;
        for (int c = 0; c < r; ++c) h[c + 1] = xi[i][c];
        cons[i] = primitive_integer(h);
    }

    // Initial simplex: r+1 constraints of full rank.
    std::vector<int> init;
    RatMat accum;
    for (size_t i = 0; i < pts.size() && int(init.size()) < r + 1; ++i) {
        RatMat test = accum;
        test.emplace_back(cons[i].begin(), cons[i].end());
        if (rank(test) == int(test.size())) {
            accum = std::move(test);
            init.push_back(int(i));
        }
    }
    if (int(init.size()) != r + 1)
        throw MathError("hull: failed to build the initial simplex");

    DualCone cone;
    cone.dim = r + 1;
    {
        RatMat R(r + 1, RatVec(r + 1));
        for (int t = 0; t <= r; ++t)
            for (int c = 0; c <= r; ++c) R[t][c] = Rat(cons[init[t]][c]);
        RatMat Rinv = inverse(R);
        for (int j = 0; j <= r; ++j) {
            RatVec col(r + 1);
            for (int t = 0; t <= r; ++t) col[t] = Rinv[t][j];
            cone.rays.push_back(primitive_integer(col));
            cone.zero.emplace_back(int(pts.size()));
        }
        // Ray j is tight on every initial constraint except the j-th.
        for (int j = 0; j <= r; ++j)
            for (int t = 0; t <= r; ++t)
                if (t != j) cone.zero[j].set(t);
        cone.processed = r + 1;
    }
    // Insert the remaining constraints; zero-set bit positions follow the
    // insertion order (the r+1 initial constraints occupy bits 0..r).
    for (size_t i = 0; i < pts.size(); ++i)
        if (std::find(init.begin(), init.end(), int(i)) == init.end())
            cone.insert(cons[i]);

    // Rays -> facets.
    struct RawFacet {
        IntVec normal;
        Rat offset;
        IntVec reduced;
    };
    std::vector<RawFacet> raw;
    for (const IntVec& y : cone.rays) {
        IntVec g(r);
        for (int c = 0; c < r; ++c) g[c] = -y[c + 1];
        // Lift the reduced functional to the ambient space.
        RatVec gq(g.begin(), g.end());
        RatVec lift = mat_vec(Minv, gq);        // M^{-T} g = M^{-1} g
        RatVec normal_q(n, Rat(0));
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < r; ++i) normal_q[c] += lift[i] * satQ[i][c];
        IntVec normal = primitive_integer(normal_q);
        Rat offset;
        bool first = true;
        for (const RatVec& p : pts) {
            Rat val = 0;
            for (int c = 0; c < n; ++c) val += Rat(normal[c]) * p[c];
            if (first || val > offset) offset = val;
            first = false;
        }
        raw.push_back({std::move(normal), offset, std::move(g)});
    }
    std::sort(raw.begin(), raw.end(), [](const RawFacet& a, const RawFacet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    raw.erase(std::unique(raw.begin(), raw.end(),
                          [](const RawFacet& a, const RawFacet& b) {
                              return a.normal == b.normal && a.offset == b.offset;
                          }),
              raw.end());

    // Vertices: points whose tight facet functionals span the hull directions.
    auto tight = [&](const RawFacet& f, size_t i) {
        Rat val = 0;
        for (int c = 0; c < n; ++c) val += Rat(f.normal[c]) * pts[i][c];
        return val == f.offset;
    };
    std::vector<int> vert_ids;
    for (size_t i = 0; i < pts.size(); ++i) {
        RatMat span;
        for (const RawFacet& f : raw)
            if (tight(f, i)) span.emplace_back(f.reduced.begin(), f.reduced.end());
        if (rank(std::move(span)) == r) vert_ids.push_back(int(i));
    }
    for (int i : vert_ids) P.vertices.push_back(pts[i]);

    for (const RawFacet& f : raw) {
        LatticePolytope::Facet facet;
        facet.normal = f.normal;
        facet.offset = f.offset;
        facet.reduced = f.reduced;
        facet.incidence = Bits(int(P.vertices.size()));
        for (size_t t = 0; t < P.vertices.size(); ++t) {
            Rat val = 0;
            for (int c = 0; c < n; ++c)
                val += Rat(f.normal[c]) * P.vertices[t][c];
            if (val == f.offset) facet.incidence.set(int(t));
        }
        P.facets.push_back(std::move(facet));
    }
    return P;
}

bool LatticePolytope::contains(const RatVec& p) const {
    for (const auto& [normal, value] : equations) {
        Rat v = 0;
        for (int c = 0; c < ambient; ++c) v += Rat(normal[c]) * p[c];
        if (v != value) return false;
    }
    for (const Facet& f : facets) {
        Rat v = 0;
        for (int c = 0; c < ambient; ++c) v += Rat(f.normal[c]) * p[c];
        if (v > f.offset) return false;
    }
    return true;
}

int LatticePolytope::vertex_index(const RatVec& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it != vertices.end() && *it == p) return int(it - vertices.begin());
    return -1;
}

Bits LatticePolytope::smallest_face(const Bits& S) const {
    Bits F(int(vertices.size()));
    for (int i = 0; i < int(vertices.size()); ++i) F.set(i);
    for (const Facet& f : facets)
        if (S.is_subset_of(f.incidence)) F = F & f.incidence;
    return F;
}

int LatticePolytope::face_dim(const Bits& S) const {
    return affine_rank(vertices, S.to_indices());
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.ambient != Q.ambient)
        throw MathError("minkowski_sum: ambient dimension mismatch");
    std::vector<RatVec> sums;
    sums.reserve(P.vertices.size() * Q.vertices.size());
    for (const RatVec& a : P.vertices)
        for (const RatVec& b : Q.vertices) {
            RatVec s(P.ambient);
            for (int c = 0; c < P.ambient; ++c) s[c] = a[c] + b[c];
            sums.push_back(std::move(s));
        }
    return hull(sums);
}

FaceLattice face_lattice(const LatticePolytope& P, int dim_gate, int vertex_gate) {
    if (P.dim > dim_gate || int(P.vertices.size()) > vertex_gate)
        throw MathError("face_lattice: size gate exceeded (dim " +
                        std::to_string(P.dim) + ", " +
                        std::to_string(P.vertices.size()) + " vertices)");
    int nv = int(P.vertices.size());
    Bits top(nv);
    for (int i = 0; i < nv; ++i) top.set(i);
    std::set<Bits> seen{top};
    std::vector<Bits> queue{top};
    while (!queue.empty()) {
        Bits F = queue.back();
        queue.pop_back();
        for (const auto& facet : P.facets) {
            Bits G = F & facet.incidence;
            if (!G.any() || seen.count(G)) continue;
            seen.insert(G);
            queue.push_back(G);
        }
    }
    FaceLattice L;
    for (const Bits& F : seen) {
        L.faces.push_back(F);
        L.dims.push_back(P.face_dim(F));
    }
    std::vector<int> idx(L.faces.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (L.dims[a] != L.dims[b]) return L.dims[a] < L.dims[b];
        return L.faces[a].to_indices() < L.faces[b].to_indices();
    });
    FaceLattice out;
    out.f_vector.assign(P.dim + 1, 0);
    for (int i : idx) {
        out.faces.push_back(L.faces[i]);
        out.dims.push_back(L.dims[i]);
        ++out.f_vector[L.dims[i]];
    }
    return out;
}

std::vector<std::pair<int, int>> FaceLattice::edges() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < faces.size(); ++i) {
        if (dims[i] != 1) continue;
        auto v = faces[i].to_indices();
        if (v.size() == 2) out.emplace_back(v[0], v[1]);
    }
    return out;
}

int FaceLattice::face_index(const Bits& S) const {
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i] == S) return int(i);
    return -1;
}

std::vector<long long> simplex_f_vector(int dim) {
    // Nonempty faces of dimension a: C(dim+1, a+1), a = 0..dim.
    std::vector<long long> f(dim + 1);
    long long c = dim + 1;
    for (int a = 0; a <= dim; ++a) {
        f[a] = c;
        c = c * (dim - a) / (a + 2);
    }
    return f;
}

std::vector<long long> product_f_vector(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
    std::vector<long long> f(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) f[i + j] += a[i] * b[j];
    return f;
}

std::vector<long long> pyramid_f_vector(const std::vector<long long>& f) {
    std::vector<long long> out(f.size() + 1, 0);
    out[0] = f[0] + 1;  // base vertices plus the apex
    for (size_t d = 1; d < out.size(); ++d) {
        out[d] = f[d - 1];  // pyramids over (d-1)-faces of the base
        if (d < f.size()) out[d] += f[d];
    }
    return out;
}

}  // namespace toric
