#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/moment.hpp"
#include "toric/mrgraph.hpp"
#include "toric/perm.hpp"
#include "toric/positroid.hpp"

namespace toric {

/// The even-n family: v = s_2 s_4 ... s_{n-2}, w = (1 n), with the staircase
/// reduced word s_1 s_2 ... s_{n-1} ... s_2 s_1.
struct EvenFamily {
    int n = 0;
    Permutation v, w;
    int d = 0;  // 3n/2 - 2
    ReducedWord word;
};

/// Throws for odd n or n < 4. Toricness is certified by the R-polynomial
/// criterion.
EvenFamily even_family(int n);

/// Closed-form flag minor Delta_{[k] \ i  + j} of the family's MR matrix,
/// for 1 <= i <= k < j <= n; exponents are indexed by the wiring graph's
/// bridge order (J^circ). The Laurent quotient in the closed form must
/// cancel; a MathError is thrown otherwise.
MRMonomial even_family_minor(int n, int k, int i, int j);

/// The k = 1 minors Delta_{j} in closed form (j = 1 gives 1).
MRMonomial even_family_column_minor(int n, int j);

struct EvenFamilyReport {
    bool ok = true;
    std::string detail;
};

/// Structure checks: P_k has the f-vector of a product of simplices (k even)
/// or of the cone over one (k odd), and the z-relations hold at `samples`
/// seeded rational parameter points.
EvenFamilyReport even_family_structures(int n, int samples, uint64_t seed);

/// The hypercube family v_n, w_n in S_{2^n}.
struct HypercubeFamily {
    int n = 0;
    Permutation v, w;
};

HypercubeFamily hypercube_perms(int n);

/// Dyadic well-distribution: every basic j-interval S and basic
/// (n-j)-interval T share exactly one value u(a), a in S.
bool is_dyadic(const Permutation& u, int n);

/// The constituent M_k(v_n, w_n) by the floor/ceil criterion (direct filter
/// for n <= 3, divisor/layer decomposition for larger n).
Constituent hypercube_constituent(int n, int k);

/// Floor/ceil membership test for a single subset.
bool hypercube_basis_test(int n, int k, const std::vector<int>& I);

}  // namespace toric
