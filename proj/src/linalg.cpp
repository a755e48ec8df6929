#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

std::vector<int> rref(RatMat& M) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    int m = int(M.size()), n = int(M[0].size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int sel = -1;
        for (int r = row; r < m; ++r)
            if (M[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[row], M[sel]);
        Rat inv = M[row][col];
        for (int c = col; c < n; ++c) M[row][c] /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (int c = col; c < n; ++c) M[r][c] -= f * M[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMat M) { return int(rref(M).size()); }

int rank_int(const IntMat& M) {
    RatMat R(M.size());
    for (size_t i = 0; i < M.size(); ++i)
        R[i].assign(M[i].begin(), M[i].end());
    return rank(std::move(R));
}

std::optional<RatVec> solve_rational(RatMat A, RatVec b) {
    int m = int(A.size());
    int n = m ? int(A[0].size()) : 0;
    for (int i = 0; i < m; ++i) A[i].push_back(b[i]);
    std::vector<int> piv = rref(A);
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == n) return std::nullopt;  // pivot in the rhs column
    RatVec x(n, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = A[i][n];
    return x;
}

RatMat nullspace(RatMat A) {
    if (A.empty()) return {};
    int n = int(A[0].size());
    std::vector<int> piv = rref(A);
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    RatMat basis;
    for (int c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        RatVec v(n, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMat inverse(RatMat A) {
    int n = int(A.size());
    for (int i = 0; i < n; ++i) {
        A[i].resize(2 * n, Rat(0));
        A[i][n + i] = 1;
    }
    std::vector<int> piv = rref(A);
    if (int(piv.size()) != n || piv.back() != n - 1)
        throw MathError("inverse: singular matrix");
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = A[i][n + j];
    return inv;
}

namespace {

IntMat identity_int(int n) {
    IntMat I(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

}  // namespace

SmithForm smith_diagonalize(IntMat A) {
    int m = int(A.size());
    int n = m ? int(A[0].size()) : 0;
    SmithForm S;
    S.U = identity_int(m);
    S.V = identity_int(n);
    S.Vinv = identity_int(n);

    auto row_swap = [&](int i, int j) {
        std::swap(A[i], A[j]);
        std::swap(S.U[i], S.U[j]);
    };
    auto row_axpy = [&](int dst, int src, const Int& c) {  // row dst -= c*src
        for (int k = 0; k < n; ++k) A[dst][k] -= c * A[src][k];
        for (int k = 0; k < m; ++k) S.U[dst][k] -= c * S.U[src][k];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(A[r][i], A[r][j]);
        for (int r = 0; r < n; ++r) std::swap(S.V[r][i], S.V[r][j]);
        std::swap(S.Vinv[i], S.Vinv[j]);
    };
    auto col_axpy = [&](int dst, int src, const Int& c) {  // col dst -= c*src
        for (int r = 0; r < m; ++r) A[r][dst] -= c * A[r][src];
        for (int r = 0; r < n; ++r) S.V[r][dst] -= c * S.V[r][src];
        // Vinv <- E^{-1} Vinv with E the elementary column matrix:
        // row src += c * row dst.
        for (int k = 0; k < n; ++k) S.Vinv[src][k] += c * S.Vinv[dst][k];
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < n; ++k) A[i][k] = -A[i][k];
        for (int k = 0; k < m; ++k) S.U[i][k] = -S.U[i][k];
    };

    int t = 0;
    while (t < m && t < n) {
        // Select the nonzero entry of smallest magnitude in the submatrix.
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c) {
                if (A[r][c] == 0) continue;
                Int a = abs(A[r][c]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (A[t][t] < 0) row_negate(t);
        bool clean = true;
        for (int r = t + 1; r < m; ++r) {
            if (A[r][t] == 0) continue;
            Int q = A[r][t] / A[t][t];
            if (q != 0) row_axpy(r, t, q);
            if (A[r][t] != 0) clean = false;
        }
        for (int c = t + 1; c < n; ++c) {
            if (A[t][c] == 0) continue;
            Int q = A[t][c] / A[t][t];
            if (q != 0) col_axpy(c, t, q);
            if (A[t][c] != 0) clean = false;
        }
        if (!clean) continue;  // re-select a smaller pivot
        S.diag.push_back(A[t][t]);
        ++t;
    }
    S.rank = t;
    return S;
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
    int m = int(A.size());
    int n = m ? int(A[0].size()) : 0;
    SmithForm S = smith_diagonalize(A);
    IntVec ub(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ub[i] += S.U[i][j] * b[j];
    IntVec y(n, 0);
    for (int i = 0; i < S.rank; ++i) {
        if (ub[i] % S.diag[i] != 0) return std::nullopt;
        y[i] = ub[i] / S.diag[i];
    }
    for (int i = S.rank; i < m; ++i)
        if (ub[i] != 0) return std::nullopt;
    IntVec x(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += S.V[i][j] * y[j];
    return x;
}

IntMat saturation_basis(const IntMat& A) {
    SmithForm S = smith_diagonalize(A);
    // Row space over Q is spanned by the first r rows of V^{-1}; because
    // V is unimodular those rows are a basis of the saturated lattice.
    IntMat B;
    for (int i = 0; i < S.rank; ++i) B.push_back(S.Vinv[i]);
    return B;
}

IntVec mat_vec(const IntMat& A, const IntVec& x) {
    IntVec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

RatVec mat_vec(const RatMat& A, const RatVec& x) {
    RatVec y(A.size(), Rat(0));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

}  // namespace toric
