#pragma once

#include <vector>

#include "eqcmm/state.hpp"

namespace eqcmm {

// One stored association |x_k> -> |y_k>.
struct TrainingPair {
  StateVector key;
  StateVector memorized;
};

// Sum of outer products M = sum_k |y_k><x_k| with the number of
// associations folded in. Value type; training returns a new memory.
struct MemoryMatrix {
  ComplexMatrix M;
  int pairs_trained = 0;

  static MemoryMatrix zero(Eigen::Index m_out, Eigen::Index m_in);
  Eigen::Index rows() const { return M.rows(); }
  Eigen::Index cols() const { return M.cols(); }
};

// Recall of a stored key split into the desired response and the crosstalk
// noise picked up from the other stored keys:
//   response = M x_j,  signal = <x_j|x_j> y_j,
//   noise    = sum_{k != j} <x_k|x_j> y_k.
// The three are computed independently; response = signal + noise holds to
// float accuracy (1e-12 at desk scale).
struct RecallDiagnostics {
  StateVector response;
  StateVector signal;
  StateVector noise;
  double noise_norm = 0.0;
  double response_cosine = 0.0;  // |cosine(response, y_j)|, 0 on zero response
};

enum class CapacityStatus { WithinCapacity, RankDeficient };

struct CapacityVerdict {
  CapacityStatus status = CapacityStatus::RankDeficient;
  int m = 0;
  int q = 0;
  int keys_rank = 0;
};

// M = sum_k |y_k><x_k|, summed in ascending k. With require_unit_energy
// every key must satisfy |E_k - 1| <= 1e-8 (the premise of the crosstalk
// analysis); training itself is well-defined without it.
MemoryMatrix train_batch(const std::vector<TrainingPair>& pairs,
                         bool require_unit_energy = false);

// One recursion step M_k = M_{k-1} + |y_k><x_k|. An empty memory adopts the
// pair's dimensions (the zero seed).
MemoryMatrix train_step(const MemoryMatrix& memory, const TrainingPair& pair,
                        bool require_unit_energy = false);

// M * stimulus.
StateVector recall(const MemoryMatrix& memory, const StateVector& stimulus);

// Signal/noise split for the j-th stored pair, j in 1..q.
RecallDiagnostics decompose_recall(const std::vector<TrainingPair>& pairs,
                                   int j, bool require_unit_energy = true);

// q-by-q Hermitian matrix of pairwise cosines; the identity for an
// orthonormal key set.
ComplexMatrix crosstalk_matrix(const std::vector<StateVector>& keys);

// WithinCapacity iff q <= m and the key set has full rank q.
CapacityVerdict capacity_check(int m, int q, int keys_rank);

}  // namespace eqcmm
