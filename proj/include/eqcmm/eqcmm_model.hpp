#pragma once

#include <vector>

#include "eqcmm/gram_schmidt.hpp"
#include "eqcmm/memory.hpp"

namespace eqcmm {

// What arrives at recall time:
//   ZQuery — the stimulus is already a basis vector z_k; apply the memory.
//   XQuery — the stimulus is in the original key coordinates; transform it
//            through the triangular factor first. This is the mode that
//            removes crosstalk for the stored keys.
//   RawX   — apply the memory to the untransformed stimulus (diagnostic).
enum class QueryMode { ZQuery, XQuery, RawX };

// Orthogonalised memory: triangular factors of the key set plus a plain
// memory trained on the basis vectors.
struct EqcmmModel {
  GSFactors factors;      // over the key set X
  ComplexMatrix Y;        // all memorized patterns, m_out-by-q
  MemoryMatrix memory_z;  // sum over kept k of |y_k><z_k|
  // per input pair: 1-based column of factors.Z, or 0 when the pair was
  // dropped as linearly dependent
  std::vector<int> key_index;

  Eigen::Index dim_in() const { return factors.Z.rows(); }
  Eigen::Index dim_out() const { return Y.rows(); }
  int pairs() const { return static_cast<int>(key_index.size()); }
};

// Orthogonalises the keys, then trains on (z_k -> y_k) for the kept pairs.
// Dropped pairs are excluded from the memory and reported via key_index /
// factors.dropped.
EqcmmModel fit(const std::vector<TrainingPair>& pairs,
               GSMode mode = GSMode::Modified, double tol = kDefaultTol);

// memory_z * z; exact recall (Eq.-25 regime) when z is a kept basis column.
StateVector recall_z(const EqcmmModel& model, const StateVector& z);

// Coordinate-transforming recall: c = Z^H x, solve R_kept a = c by
// back-substitution, return Y_kept a. Acts as Y X^+ on span(Z); stimuli
// orthogonal to span(Z) recall the zero vector.
StateVector recall_x(const EqcmmModel& model, const StateVector& x);

// memory_z * x with no transform; generally wrong for non-orthonormal keys.
StateVector recall_raw(const EqcmmModel& model, const StateVector& x);

StateVector recall(const EqcmmModel& model, const StateVector& stimulus,
                   QueryMode mode);

}  // namespace eqcmm
