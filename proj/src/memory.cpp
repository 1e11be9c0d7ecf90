#include "eqcmm/memory.hpp"

#include <cmath>
#include <string>

namespace eqcmm {

MemoryMatrix MemoryMatrix::zero(Eigen::Index m_out, Eigen::Index m_in) {
  if (m_out < 1 || m_in < 1) {
    throw DomainError("MemoryMatrix::zero: dimensions must be positive");
  }
  MemoryMatrix mem;
  mem.M = ComplexMatrix::Zero(m_out, m_in);
  return mem;
}

MemoryMatrix train_step(const MemoryMatrix& memory, const TrainingPair& pair,
                        bool require_energy) {
  if (require_energy) {
    require_unit_energy(pair.key, "train_step: key");
  }
  MemoryMatrix next = memory;
  if (next.M.size() == 0) {
    next.M = ComplexMatrix::Zero(pair.memorized.size(), pair.key.size());
  }
  if (next.M.rows() != pair.memorized.size() ||
      next.M.cols() != pair.key.size()) {
    throw ShapeError("train_step: pair dims (" +
                     std::to_string(pair.memorized.size()) + " x " +
                     std::to_string(pair.key.size()) +
                     ") do not match memory (" + std::to_string(next.M.rows()) +
                     " x " + std::to_string(next.M.cols()) + ")");
  }
  next.M.noalias() += pair.memorized * pair.key.adjoint();
  next.pairs_trained += 1;
  return next;
}

MemoryMatrix train_batch(const std::vector<TrainingPair>& pairs,
                         bool require_energy) {
  if (pairs.empty()) {
    throw DomainError("train_batch: empty training set");
  }
  MemoryMatrix memory;
  for (const auto& pair : pairs) {
    memory = train_step(memory, pair, require_energy);
  }
  return memory;
}

StateVector recall(const MemoryMatrix& memory, const StateVector& stimulus) {
  if (memory.M.cols() != stimulus.size()) {
    throw ShapeError("recall: stimulus dim " + std::to_string(stimulus.size()) +
                     " does not match memory input dim " +
                     std::to_string(memory.M.cols()));
  }
  return memory.M * stimulus;
}

RecallDiagnostics decompose_recall(const std::vector<TrainingPair>& pairs,
                                   int j, bool require_energy) {
  const int q = static_cast<int>(pairs.size());
  if (j < 1 || j > q) {
    throw DomainError("decompose_recall: index " + std::to_string(j) +
                      " outside 1.." + std::to_string(q));
  }
  if (require_energy) {
    for (const auto& pair : pairs) {
      require_unit_energy(pair.key, "decompose_recall: key");
    }
  }
  const StateVector& xj = pairs[j - 1].key;
  const StateVector& yj = pairs[j - 1].memorized;

  RecallDiagnostics d;
  d.response = recall(train_batch(pairs, require_energy), xj);
  d.signal = inner(xj, xj) * yj;
  d.noise = StateVector::Zero(yj.size());
  for (int k = 0; k < q; ++k) {
    if (k == j - 1) {
      continue;
    }
    d.noise += inner(pairs[k].key, xj) * pairs[k].memorized;
  }
  d.noise_norm = std::sqrt(energy(d.noise));
  d.response_cosine =
      (energy(d.response) > kEpsZero && energy(yj) > kEpsZero)
          ? std::abs(cosine(d.response, yj))
          : 0.0;
  return d;
}

ComplexMatrix crosstalk_matrix(const std::vector<StateVector>& keys) {
  const int q = static_cast<int>(keys.size());
  if (q == 0) {
    throw DomainError("crosstalk_matrix: empty key list");
  }
  ComplexMatrix C(q, q);
  for (int k = 0; k < q; ++k) {
    for (int j = 0; j < q; ++j) {
      C(k, j) = cosine(keys[k], keys[j]);
    }
  }
  return C;
}

CapacityVerdict capacity_check(int m, int q, int keys_rank) {
  if (m < 1 || q < 1) {
    throw DomainError("capacity_check: m and q must be positive");
  }
  CapacityVerdict v;
  v.m = m;
  v.q = q;
  v.keys_rank = keys_rank;
  v.status = (q <= m && keys_rank == q) ? CapacityStatus::WithinCapacity
                                        : CapacityStatus::RankDeficient;
  return v;
}

}  // namespace eqcmm
