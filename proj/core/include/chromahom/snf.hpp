// Smith normal form over Z and the homology helpers built on it.
#pragma once

#include <optional>

#include "chromahom/abelian.hpp"
#include "chromahom/matrix.hpp"

namespace chromahom {

struct SnfResult {
  // Length min(n_rows, n_cols): d_1 | d_2 | ... | d_r followed by zeros,
  // all entries nonnegative.
  std::vector<mpz_class> diagonal;
  int rank = 0;  // number of nonzero diagonal entries
  // Unimodular transforms with U * M * V = diag(diagonal); only filled when
  // requested (dense path).
  std::optional<ZMat> U, V;

  // Diagonal entries > 1, as machine integers (throws if one exceeds int64).
  std::vector<long long> nontrivial_factors() const;
};

// Two-phase: greedy unit-pivot sparse elimination, then dense GMP reduction
// (least-absolute-value pivoting) on the residual. with_transforms forces the
// dense path from the start so U and V can be tracked.
SnfResult smith_normal_form(const SparseIntMat& m, bool with_transforms = false);

int rank_z(const SparseIntMat& m);

// Rank of m over Z_p, i.e. number of SNF factors not divisible by p.
int rank_zp(const SparseIntMat& m, long long p);

// Middle homology of  C_{n+1} --d_in--> C_n --d_out--> C_{n-1}  (must compose
// to zero; throws std::invalid_argument otherwise):
//   rank = dim C_n - rank d_out - rank d_in,
//   torsion = nontrivial invariant factors of d_in.
AbelianGroup homology_pair(const SparseIntMat& d_out, const SparseIntMat& d_in);

// Universal coefficients: H^n = free(H_n) + tor(H_{n-1}).
AbelianGroup cohomology_from_homology(const AbelianGroup& h_n,
                                      const AbelianGroup& h_n_minus_1);

}  // namespace chromahom
