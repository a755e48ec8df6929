#include "toric/families.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace toric {

EvenFamily even_family(int n) {
    if (n < 4 || n % 2 != 0)
        throw MathError("even_family: n must be even and at least 4");
    EvenFamily F;
    F.n = n;
    std::vector<int> vol(n);
    for (int i = 0; i < n; ++i) vol[i] = i + 1;
    for (int i = 2; i + 1 <= n - 1; i += 2) std::swap(vol[i - 1], vol[i]);
    F.v = Permutation::from_one_line(vol);
    std::vector<int> wol(n);
    for (int i = 0; i < n; ++i) wol[i] = i + 1;
    std::swap(wol[0], wol[n - 1]);
    F.w = Permutation::from_one_line(wol);
    F.d = 3 * n / 2 - 2;
    for (int i = 1; i <= n - 1; ++i) F.word.letters.push_back(i);
    for (int i = n - 2; i >= 1; --i) F.word.letters.push_back(i);
    if (F.w.length() - F.v.length() != F.d)
        throw MathError("even_family: length bookkeeping failed");
    RPolynomial R = r_polynomial(F.v, F.w);
    if (R.coeff(F.d - 1) != -int64_t(F.d))
        throw MathError("even_family: interval failed the toricness test");
    return F;
}

namespace {

/// Laurent exponents by chip position; negative entries must cancel before
/// conversion to an MRMonomial.
using Laurent = std::map<int, int>;

void mul_t(Laurent& L, int pos, int e) {
    L[pos] += e;
    if (L[pos] == 0) L.erase(pos);
}

// Delta_j for the even family: j = 2q uses t_{2q-1} * prod t_{2n-3-2l},
// j = 2q-1 uses the product alone.
Laurent column_minor_laurent(int n, int j) {
    Laurent L;
    if (j == 1) return L;
    int q = (j + 1) / 2;
    if (j % 2 == 0) mul_t(L, 2 * q - 1, 1);
    for (int l = 0; l <= q - 2; ++l) mul_t(L, 2 * n - 3 - 2 * l, 1);
    return L;
}

MRMonomial laurent_to_monomial(const Laurent& L,
                               const WiringGraph& G) {
    MRMonomial m;
    m.exponents.assign(G.params(), 0);
    m.sign = 1;
    for (const auto& [pos, e] : L) {
        if (e < 0)
            throw MathError("even_family_minor: Laurent quotient did not cancel");
        if (pos < 1 || pos > G.ell() || G.var_index[pos] < 0)
            throw MathError("even_family_minor: parameter t" + std::to_string(pos) +
                            " is not a bridge");
        m.exponents[G.var_index[pos]] = e;
    }
    return m;
}

const WiringGraph& family_graph(int n) {
    thread_local std::map<int, WiringGraph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        EvenFamily F = even_family(n);
        it = cache.emplace(n, build_graph(F.v, F.word, n)).first;
    }
    return it->second;
}

}  // namespace

MRMonomial even_family_column_minor(int n, int j) {
    if (j < 1 || j > n) throw MathError("even_family_column_minor: bad index");
    return laurent_to_monomial(column_minor_laurent(n, j), family_graph(n));
}

MRMonomial even_family_minor(int n, int k, int i, int j) {
    if (!(1 <= i && i <= k && k < j && j <= n))
        throw MathError("even_family_minor: need 1 <= i <= k < j <= n");
    Laurent L;
    for (int q = i + 1; q <= k; ++q) mul_t(L, q - 1, 1);
    for (const auto& [pos, e] : column_minor_laurent(n, j)) mul_t(L, pos, e);
    int denom = (k % 2 == 1) ? k : k + 1;
    for (const auto& [pos, e] : column_minor_laurent(n, denom)) mul_t(L, pos, -e);
    return laurent_to_monomial(L, family_graph(n));
}

namespace {

/// Column-reduce a rational matrix to the Schubert-cell normal form for w:
/// column c gets its pivot at row w(c), scaled to the sign pattern of the
/// family's parametrizing matrix, with zeros to the right of each pivot.
/// Returns false if the pivot pattern fails.
bool schubert_normal_form(RatMat& A, const Permutation& w) {
    int n = int(A.size());
    std::vector<bool> used(n + 1, false);
    for (int c = 0; c < n; ++c) {
        int pr = w(c + 1) - 1;
        // The lowest unused nonzero row of column c must be pr.
        int lowest = -1;
        for (int r = n - 1; r >= 0; --r) {
            if (used[r]) continue;
            if (A[r][c] != 0) {
                lowest = r;
                break;
            }
        }
        if (lowest != pr) return false;
        used[pr] = true;
        // Target pivot value: +1 for the bottom-left pivot (row n), -1 for
        // the others, matching the printed matrix pattern.
        Rat target = (pr == n - 1) ? Rat(1) : Rat(-1);
        Rat scale = target / A[pr][c];
        for (int r = 0; r < n; ++r) A[r][c] *= scale;
        for (int c2 = c + 1; c2 < n; ++c2) {
            if (A[pr][c2] == 0) continue;
            Rat f = A[pr][c2] / A[pr][c];
            for (int r = 0; r < n; ++r) A[r][c2] -= f * A[r][c];
        }
    }
    return true;
}

}  // namespace

EvenFamilyReport even_family_structures(int n, int samples, uint64_t seed) {
    EvenFamilyReport rep;
    EvenFamily F = even_family(n);
    BruhatInterval I = interval(F.v, F.w);

    // (i) combinatorial type of the positroid polytopes.
    for (int k = 1; k < n; ++k) {
        Constituent C = constituent(I, k);
        LatticePolytope Pk = positroid_polytope(C);
        std::vector<long long> expect =
            product_f_vector(simplex_f_vector(k - 1), simplex_f_vector(n - k - 1));
        if (k % 2 == 1) expect = pyramid_f_vector(expect);
        FaceLattice L = face_lattice(Pk);
        std::vector<long long> got(L.f_vector.begin(), L.f_vector.end());
        if (got != expect) {
            rep.ok = false;
            rep.detail = "P_" + std::to_string(k) + " f-vector mismatch";
            return rep;
        }
    }

    // (ii) z-relations at seeded rational parameter points.
    const WiringGraph& G = family_graph(n);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < samples; ++trial) {
        // Positive rational parameters keep every minor nonzero.
        std::vector<Rat> t(G.params());
        for (auto& x : t)
            x = Rat(1 + int(rng() % 20), 1 + int(rng() % 10));
        // Numeric MR matrix: multiply the chips.
        RatMat A(n, RatVec(n, Rat(0)));
        for (int i = 0; i < n; ++i) A[i][i] = 1;
        for (int pos = 1; pos <= G.ell(); ++pos) {
            int a = G.chips[pos - 1].wire - 1;
            if (G.chips[pos - 1].is_bridge) {
                Rat tp = t[G.var_index[pos]];
                for (int r = 0; r < n; ++r) A[r][a] += tp * A[r][a + 1];
            } else {
                for (int r = 0; r < n; ++r) {
                    Rat tmp = A[r][a];
                    A[r][a] = A[r][a + 1];
                    A[r][a + 1] = -tmp;
                }
            }
        }
        if (!schubert_normal_form(A, F.w)) {
            rep.ok = false;
            rep.detail = "Schubert normal form pivot pattern failed";
            return rep;
        }
        // Read the z-coordinates: column 1 holds z_{n-1}..z_1 top to bottom,
        // row 1 holds (-1)^{c-1} z_{n+c-2} in columns 2..n-1.
        std::vector<Rat> z(2 * n - 2);  // z[1..2n-3]
        for (int i = 1; i <= n - 1; ++i) z[n - i] = A[i - 1][0];
        for (int c = 2; c <= n - 1; ++c)
            z[n + c - 2] = (c % 2 == 0) ? -A[0][c - 1] : A[0][c - 1];
        for (int i = 1; i <= 2 * n - 3; ++i)
            if (z[i] == 0) {
                rep.ok = false;
                rep.detail = "z_" + std::to_string(i) + " vanished";
                return rep;
            }
        if (z[n - 1] != z[n - 2] * z[n]) {
            rep.ok = false;
            rep.detail = "relation z_{n-1} = z_{n-2} z_n failed";
            return rep;
        }
        for (int i = 2; i < n - 2; i += 2) {
            if (z[i] * z[2 * n - 2 - i] != z[i + 1] * z[2 * n - 3 - i]) {
                rep.ok = false;
                rep.detail = "binomial relation failed at i = " + std::to_string(i);
                return rep;
            }
        }
    }
    return rep;
}

HypercubeFamily hypercube_perms(int n) {
    if (n < 1) throw MathError("hypercube_perms: n >= 1");
    std::vector<int> v = {1, 2};
    for (int m = 1; m < n; ++m) {
        std::vector<int> next;
        next.reserve(v.size() * 2);
        for (int x : v) {
            next.push_back(x);
            next.push_back(x + int(v.size()));
        }
        v = std::move(next);
    }
    HypercubeFamily F;
    F.n = n;
    F.v = Permutation::from_one_line(v);
    std::vector<int> w(v.rbegin(), v.rend());
    F.w = Permutation::from_one_line(w);
    return F;
}

bool is_dyadic(const Permutation& u, int n) {
    int N = 1 << n;
    if (u.n() != N) throw MathError("is_dyadic: permutation is not in S_{2^n}");
    for (int j = 0; j <= n; ++j) {
        int s_len = 1 << j, t_len = 1 << (n - j);
        for (int sb = 0; sb < N; sb += s_len) {
            for (int tb = 0; tb < N; tb += t_len) {
                int hits = 0;
                for (int a = sb + 1; a <= sb + s_len; ++a) {
                    int x = u(a);
                    if (x > tb && x <= tb + t_len) ++hits;
                }
                if (hits != 1) return false;
            }
        }
    }
    return true;
}

bool hypercube_basis_test(int n, int k, const std::vector<int>& I) {
    int N = 1 << n;
    for (int j = 0; j <= n; ++j) {
        int t_len = 1 << (n - j);
        int lo = k >> j, hi = (k + (1 << j) - 1) >> j;  // floor and ceil
        for (int tb = 0; tb < N; tb += t_len) {
            int cnt = 0;
            for (int x : I)
                if (x > tb && x <= tb + t_len) ++cnt;
            if (cnt < lo || cnt > hi) return false;
        }
    }
    return true;
}

Constituent hypercube_constituent(int n, int k) {
    int N = 1 << n;
    if (k < 1 || k >= N)
        throw MathError("hypercube_constituent: need 1 <= k <= 2^n - 1");
    Constituent C;
    C.n = N;
    C.k = k;
    if (n <= 3) {
        // Direct floor/ceil filter over all k-subsets.
        std::vector<int> pick(k);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                if (hypercube_basis_test(n, k, pick)) C.bases.push_back(pick);
                return;
            }
            for (int x = start; x <= N; ++x) {
                pick[depth] = x;
                rec(x + 1, depth + 1);
            }
        };
        rec(1, 0);
        return C;
    }
    int l = 0, kk = k;
    while (kk % 2 == 0) {
        kk /= 2;
        ++l;
    }
    if (l > 0) {
        // Product over the basic (n-l)-intervals.
        Constituent sub = hypercube_constituent(n - l, kk);
        int blocks = 1 << l, width = 1 << (n - l);
        std::vector<std::vector<int>> acc = {{}};
        for (int b = 0; b < blocks; ++b) {
            std::vector<std::vector<int>> next;
            for (const auto& partial : acc)
                for (const auto& basis : sub.bases) {
                    std::vector<int> ext = partial;
                    for (int x : basis) ext.push_back(x + b * width);
                    next.push_back(std::move(ext));
                }
            acc = std::move(next);
        }
        C.bases = std::move(acc);
        std::sort(C.bases.begin(), C.bases.end());
        return C;
    }
    if (k == 1) {
        for (int x = 1; x <= N; ++x) C.bases.push_back({x});
        return C;
    }
    int L = 0;
    while ((1 << L) < k) ++L;
    if (L == n) {
        Constituent comp = hypercube_constituent(n, N - k);
        for (const auto& basis : comp.bases) {
            std::vector<int> cb;
            int t = 0;
            for (int x = 1; x <= N; ++x) {
                if (t < int(basis.size()) && basis[t] == x) ++t;
                else cb.push_back(x);
            }
            C.bases.push_back(std::move(cb));
        }
        std::sort(C.bases.begin(), C.bases.end());
        return C;
    }
    // Layer lift: pick the blocks by M_k(L), then one element per block.
    Constituent top = hypercube_constituent(L, k);
    int width = 1 << (n - L);
    for (const auto& blocks : top.bases) {
        std::vector<std::vector<int>> acc = {{}};
        for (int b : blocks) {
            std::vector<std::vector<int>> next;
            for (const auto& partial : acc)
                for (int off = 1; off <= width; ++off) {
                    std::vector<int> ext = partial;
                    ext.push_back((b - 1) * width + off);
                    next.push_back(std::move(ext));
                }
            acc = std::move(next);
        }
        for (auto& basis : acc) C.bases.push_back(std::move(basis));
    }
    std::sort(C.bases.begin(), C.bases.end());
    return C;
}

}  // namespace toric
