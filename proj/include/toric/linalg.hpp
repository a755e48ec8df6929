#pragma once

#include <optional>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& M);

int rank(RatMat M);
int rank_int(const IntMat& M);

/// One solution of A x = b over the rationals, or nullopt if inconsistent.
std::optional<RatVec> solve_rational(RatMat A, RatVec b);

/// Basis of the rational nullspace of A.
RatMat nullspace(RatMat A);

/// Inverse of a square rational matrix; throws MathError if singular.
RatMat inverse(RatMat A);

/// Diagonalization U A V = D over the integers (Smith-style, without the
/// divisibility chain). Returns the diagonal entries and the transforms.
struct SmithForm {
    IntMat U;      // m x m unimodular
    IntMat V;      // n x n unimodular
    IntMat Vinv;   // V^{-1}
    IntVec diag;   // nonzero diagonal entries d_1..d_r
    int rank = 0;
};
SmithForm smith_diagonalize(IntMat A);

/// One integer solution of A x = b, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

/// Basis of the saturated lattice Z^n cap span_Q(rows of A): integer points
/// of the row space. Rows of the result are the basis.
IntMat saturation_basis(const IntMat& A);

IntVec mat_vec(const IntMat& A, const IntVec& x);
RatVec mat_vec(const RatMat& A, const RatVec& x);

}  // namespace toric
