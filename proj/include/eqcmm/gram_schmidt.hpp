#pragma once

#include <vector>

#include "eqcmm/state.hpp"

namespace eqcmm {

// Classical is the textbook recurrence (all projection coefficients taken
// against the original key); Modified subtracts projections one at a time,
// which keeps orthogonality under ill conditioning. Identical in exact
// arithmetic.
enum class GSMode { Classical, Modified };

// Thin factorization of a key set X (columns x_1..x_q, dim m):
//   X ~= Z * R with Z m-by-rank orthonormal and R rank-by-q, upper
//   triangular on the kept columns.
// Dropped columns (linearly dependent inputs) get their projection
// coefficients in R but no diagonal pivot and no Z column.
struct GSFactors {
  ComplexMatrix Z;
  ComplexMatrix R;
  int rank = 0;
  std::vector<int> dropped;  // 1-based input indices
  double tol = kDefaultTol;
};

// Orthonormalizes `keys` in input order. A key whose residual norm falls to
// tol * |x_k| or below is recorded in `dropped` and contributes no basis
// column. `reorthogonalize` runs a second projection sweep per key (off by
// default; the plain sweeps already meet the advertised tolerances).
GSFactors gram_schmidt(const std::vector<StateVector>& keys,
                       GSMode mode = GSMode::Modified,
                       double tol = kDefaultTol,
                       bool reorthogonalize = false);

// max_{i,j} |<z_i|z_j> - delta_ij| over the columns of Z.
double orthonormality_residual(const ComplexMatrix& Z);
double orthonormality_residual(const std::vector<StateVector>& keys);

// Z * R; kept columns match the original keys within 10 * tol * |x_k|.
ComplexMatrix reconstruct(const GSFactors& f);

}  // namespace eqcmm
