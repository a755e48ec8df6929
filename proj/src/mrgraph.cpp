#include "toric/mrgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace toric {

namespace {

std::string exp_str(const std::vector<int>& e, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << names[i];
        if (e[i] != 1) os << "^" << e[i];
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1) os << a.str() << "*";
        os << exp_str(e, names);
    }
    return os.str();
}

ReducedWord default_reduced_word(const Permutation& w) {
    std::vector<int> rev;
    Permutation u = w;
    int n = u.n();
    for (int x = n; x >= 2; --x) {
        int p = 0;
        for (int i = 1; i <= n; ++i)
            if (u(i) == x) { p = i; break; }
        if (p == x) continue;
        // Walk the value x right from position p to its home at x; every
        // swap is a descent because all larger values are already placed.
        for (int i = p; i < x; ++i) {
            rev.push_back(i);
            u = u.right_mult_s(i);
        }
    }
    ReducedWord word{std::vector<int>(rev.rbegin(), rev.rend())};
    return word;
}

ReducedWord alternative_reduced_word(const Permutation& w) {
    // Apply the first commutation or braid move to the default word. When no
    // move applies the word is the unique reduced word for w (Tits), and the
    // default word is returned unchanged.
    ReducedWord word = default_reduced_word(w);
    auto& L = word.letters;
    for (size_t p = 0; p + 1 < L.size(); ++p) {
        if (std::abs(L[p] - L[p + 1]) >= 2) {
            std::swap(L[p], L[p + 1]);
            return word;
        }
        if (p + 2 < L.size() && L[p] == L[p + 2] &&
            std::abs(L[p] - L[p + 1]) == 1) {
            std::swap(L[p], L[p + 1]);  // (a,b,a) -> (b,a,b)
            L[p + 2] = L[p];
            return word;
        }
    }
    return word;
}

Pds pds(const Permutation& v, const ReducedWord& word) {
    Pds out;
    Permutation u = v;
    int l = word.size();
    std::vector<bool> plus(l + 1, false);
    for (int j = l; j >= 1; --j) {
        int i = word.letters[j - 1];
        if (u.has_right_descent(i)) {
            plus[j] = true;
            u = u.right_mult_s(i);
        }
    }
    if (!u.is_identity())
        throw NonemptyIntervalRequired(
            "pds: v does not embed in the word (v is not <= w)");
    for (int j = 1; j <= l; ++j)
        (plus[j] ? out.jplus : out.jcirc).push_back(j);
    return out;
}

std::vector<std::string> WiringGraph::param_names() const {
    std::vector<std::string> names;
    names.reserve(jcirc.size());
    for (int j : jcirc) names.push_back("t" + std::to_string(j));
    return names;
}

WiringGraph build_graph(const Permutation& v, const ReducedWord& word, int n) {
    WiringGraph G;
    G.n = n;
    G.v = v;
    G.w = word.product(n);
    G.word = word;
    Pds p = pds(v, word);
    G.jcirc = p.jcirc;
    G.var_index.assign(word.size() + 1, -1);
    for (size_t t = 0; t < p.jcirc.size(); ++t) G.var_index[p.jcirc[t]] = int(t);
    G.chips.reserve(word.size());
    for (int j = 1; j <= word.size(); ++j)
        G.chips.push_back({word.letters[j - 1], G.var_index[j] >= 0});
    return G;
}

namespace {

uint32_t mask_of(const std::vector<int>& heights) {
    uint32_t m = 0;
    for (int h : heights) m |= uint32_t{1} << (h - 1);
    return m;
}

// reach[j] = masks of occupied heights at column j from which the sink mask
// is reachable at column l.
std::vector<std::unordered_set<uint32_t>> backward_reach(const WiringGraph& G, int k) {
    int l = G.ell();
    std::vector<std::unordered_set<uint32_t>> reach(l + 1);
    reach[l].insert((uint32_t{1} << k) - 1);
    for (int j = l; j >= 1; --j) {
        const auto& chip = G.chips[j - 1];
        uint32_t lo = uint32_t{1} << (chip.wire - 1);
        uint32_t hi = uint32_t{1} << chip.wire;
        for (uint32_t T : reach[j]) {
            if (chip.is_bridge) {
                reach[j - 1].insert(T);  // nobody moved
                // A path now at the lower wire may have arrived by bridge.
                if ((T & lo) && !(T & hi)) reach[j - 1].insert((T ^ lo) | hi);
            } else {
                // Crossing: swap the two bits.
                uint32_t S = T & ~(lo | hi);
                if (T & lo) S |= hi;
                if (T & hi) S |= lo;
                reach[j - 1].insert(S);
            }
        }
    }
    return reach;
}

struct PathSearch {
    const WiringGraph& G;
    const std::vector<std::unordered_set<uint32_t>>& reach;
    int k;
    std::vector<int> h;                       // current height of path t
    std::vector<std::vector<int>> trace;      // per path, heights per column
    std::vector<int> bridges;                 // chip positions used
    int cross_ups = 0;
    std::vector<PathCollection>* out;
    const std::vector<int>* sources;

    void record() {
        PathCollection pc;
        pc.sources = *sources;
        pc.sinks.resize(k);
        for (int t = 0; t < k; ++t) pc.sinks[t] = t + 1;
        pc.paths = trace;
        pc.bridges_used = bridges;
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (h[a] > h[b]) ++inv;
        int sign = (inv % 2 == 0) ? 1 : -1;
        if (cross_ups % 2 != 0) sign = -sign;
        pc.sign = sign;
        out->push_back(std::move(pc));
    }

    void dfs(int j) {
        uint32_t m = mask_of(h);
        auto it = reach[j].find(m);
        if (it == reach[j].end()) return;
        if (j == G.ell()) {
            record();
            return;
        }
        const auto& chip = G.chips[j];
        int a = chip.wire;
        int at_lo = -1, at_hi = -1;
        for (int t = 0; t < k; ++t) {
            if (h[t] == a) at_lo = t;
            if (h[t] == a + 1) at_hi = t;
        }
        auto push_col = [&] {
            for (int t = 0; t < k; ++t) trace[t].push_back(h[t]);
        };
        auto pop_col = [&] {
            for (int t = 0; t < k; ++t) trace[t].pop_back();
        };
        if (!chip.is_bridge) {
            // Mandatory crossing; strands do not meet, so both may be used.
            if (at_lo >= 0) { h[at_lo] = a + 1; ++cross_ups; }
            if (at_hi >= 0) h[at_hi] = a;
            push_col();
            dfs(j + 1);
            pop_col();
            if (at_lo >= 0) { h[at_lo] = a; --cross_ups; }
            if (at_hi >= 0) h[at_hi] = a + 1;
        } else {
            // Option 1: nobody takes the bridge.
            push_col();
            dfs(j + 1);
            pop_col();
            // Option 2: the path on the upper wire descends.
            if (at_hi >= 0 && at_lo < 0) {
                h[at_hi] = a;
                bridges.push_back(j + 1);
                push_col();
                dfs(j + 1);
                pop_col();
                bridges.pop_back();
                h[at_hi] = a + 1;
            }
        }
    }
};

}  // namespace

std::vector<PathCollection> ni_path_collections(const WiringGraph& G,
                                                const std::vector<int>& I) {
    std::vector<int> src = I;
    std::sort(src.begin(), src.end());
    int k = int(src.size());
    std::vector<PathCollection> out;
    if (k == 0) {
        out.push_back(PathCollection{});  // the empty collection: Delta_{} = 1
        return out;
    }
    if (k > G.n) return out;
    auto reach = backward_reach(G, k);
    PathSearch ps{G, reach, k, src, {}, {}, 0, &out, &src};
    ps.trace.assign(k, {});
    for (int t = 0; t < k; ++t) ps.trace[t].push_back(src[t]);
    ps.dfs(0);
    return out;
}

std::vector<MRMonomial> flag_minor(const WiringGraph& G, const std::vector<int>& I) {
    std::vector<MRMonomial> out;
    for (const PathCollection& pc : ni_path_collections(G, I)) {
        MRMonomial m;
        m.exponents.assign(G.params(), 0);
        for (int pos : pc.bridges_used) m.exponents[G.var_index[pos]] += 1;
        m.sign = pc.sign;
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<MRMonomial> flag_minor_toric(const WiringGraph& G,
                                           const std::vector<int>& I) {
    std::vector<MRMonomial> terms = flag_minor(G, I);
    if (terms.empty()) return std::nullopt;
    if (terms.size() > 1)
        throw MultipleCollections("flag_minor_toric: " +
                                  std::to_string(terms.size()) +
                                  " NI path collections; interval is not toric");
    if (terms[0].sign != 1 || !terms[0].squarefree())
        throw NotToric("flag_minor_toric: minor is not a squarefree monic monomial");
    return terms[0];
}

std::vector<std::vector<Poly>> symbolic_matrix(const WiringGraph& G) {
    int n = G.n, nv = G.params();
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(nv)));
    for (int i = 0; i < n; ++i) M[i][i] = Poly::one(nv);
    for (int j = 1; j <= G.ell(); ++j) {
        const auto& chip = G.chips[j - 1];
        int a = chip.wire - 1;  // 0-based column of the lower wire
        if (chip.is_bridge) {
            Poly t = Poly::var(nv, G.var_index[j]);
            for (int r = 0; r < n; ++r) M[r][a] += t * M[r][a + 1];
        } else {
            for (int r = 0; r < n; ++r) {
                Poly tmp = M[r][a];
                M[r][a] = M[r][a + 1];
                M[r][a + 1] = -tmp;
            }
        }
    }
    return M;
}

Poly matrix_flag_minor(const std::vector<std::vector<Poly>>& M,
                       const std::vector<int>& I) {
    std::vector<int> rows = I;
    std::sort(rows.begin(), rows.end());
    int k = int(rows.size());
    int nv = M.empty() ? 0 : M[0][0].nvars();
    if (k == 0) return Poly::one(nv);
    // D[mask] = minor with rows {rows[t] : t in mask} and columns 1..|mask|,
    // expanded along the last column.
    std::vector<Poly> D(size_t{1} << k, Poly(nv));
    D[0] = Poly::one(nv);
    for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
        int c = __builtin_popcount(mask);  // use column c (1-based)
        Poly sum(nv);
        int t_index = 0;
        for (int t = 0; t < k; ++t) {
            if (!(mask & (uint32_t{1} << t))) continue;
            ++t_index;  // 1-based position of rows[t] within the mask
            const Poly& entry = M[rows[t] - 1][c - 1];
            if (!entry.is_zero()) {
                Poly term = entry * D[mask ^ (uint32_t{1} << t)];
                if ((t_index + c) % 2 != 0) term = -term;
                sum += term;
            }
        }
        D[mask] = std::move(sum);
    }
    return D[(uint32_t{1} << k) - 1];
}

Poly lgv_polynomial(const WiringGraph& G, const std::vector<int>& I) {
    Poly sum(G.params());
    for (const MRMonomial& m : flag_minor(G, I))
        sum += Poly::term(m.exponents, Int(m.sign));
    return sum;
}

Poly incidence_plucker(const std::vector<std::vector<Poly>>& M,
                       const std::vector<int>& I, const std::vector<int>& J) {
    int nv = M.empty() ? 0 : M[0][0].nvars();
    Poly sum(nv);
    for (int j : J) {
        if (std::find(I.begin(), I.end(), j) != I.end()) continue;
        int before = 0, after = 0;
        for (int x : J)
            if (x < j) ++before;
        for (int x : I)
            if (x > j) ++after;
        std::vector<int> Ij = I;
        Ij.push_back(j);
        std::sort(Ij.begin(), Ij.end());
        std::vector<int> Jj;
        for (int x : J)
            if (x != j) Jj.push_back(x);
        Poly term = matrix_flag_minor(M, Ij) * matrix_flag_minor(M, Jj);
        if ((before + after) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

}  // namespace toric
