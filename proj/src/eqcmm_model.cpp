#include "eqcmm/eqcmm_model.hpp"

#include <cmath>
#include <string>

namespace eqcmm {

EqcmmModel fit(const std::vector<TrainingPair>& pairs, GSMode mode,
               double tol) {
  if (pairs.empty()) {
    throw DomainError("fit: empty training set");
  }
  const int q = static_cast<int>(pairs.size());
  std::vector<StateVector> keys;
  keys.reserve(pairs.size());
  for (const auto& pair : pairs) {
    keys.push_back(pair.key);
  }

  EqcmmModel model;
  // the second projection sweep keeps the basis orthonormal to machine
  // precision, which the coordinate-transform recall needs on
  // ill-conditioned key sets (single-sweep loss of orthogonality gets
  // amplified by the triangular solve)
  model.factors = gram_schmidt(keys, mode, tol, /*reorthogonalize=*/true);

  const Eigen::Index m_out = pairs.front().memorized.size();
  model.Y.resize(m_out, q);
  for (int k = 0; k < q; ++k) {
    if (pairs[k].memorized.size() != m_out) {
      throw ShapeError("fit: memorized vectors have mixed dimensions");
    }
    model.Y.col(k) = pairs[k].memorized;
  }

  model.key_index.assign(q, 0);
  auto next_drop = model.factors.dropped.begin();
  int col = 0;
  for (int k = 0; k < q; ++k) {
    if (next_drop != model.factors.dropped.end() && *next_drop == k + 1) {
      ++next_drop;
      continue;
    }
    model.key_index[k] = ++col;
  }

  MemoryMatrix mem = MemoryMatrix::zero(m_out, model.factors.Z.rows());
  for (int k = 0; k < q; ++k) {
    if (model.key_index[k] == 0) {
      continue;
    }
    TrainingPair zp{model.factors.Z.col(model.key_index[k] - 1),
                    pairs[k].memorized};
    mem = train_step(mem, zp);
  }
  model.memory_z = mem;
  return model;
}

StateVector recall_z(const EqcmmModel& model, const StateVector& z) {
  return recall(model.memory_z, z);
}

StateVector recall_x(const EqcmmModel& model, const StateVector& x) {
  const GSFactors& f = model.factors;
  if (x.size() != f.Z.rows()) {
    throw ShapeError("recall_x: stimulus dim " + std::to_string(x.size()) +
                     " does not match key dim " + std::to_string(f.Z.rows()));
  }
  const int r = f.rank;

  // triangular system over the kept columns only
  ComplexMatrix R_kept(r, r);
  ComplexMatrix Y_kept(model.Y.rows(), r);
  for (int k = 0; k < model.pairs(); ++k) {
    const int col = model.key_index[k];
    if (col == 0) {
      continue;
    }
    R_kept.col(col - 1) = f.R.col(k);
    Y_kept.col(col - 1) = model.Y.col(k);
  }

  Eigen::VectorXcd c = f.Z.adjoint() * x;
  Eigen::VectorXcd a(r);
  for (int i = r - 1; i >= 0; --i) {
    Complex s = c(i);
    for (int k = i + 1; k < r; ++k) {
      s -= R_kept(i, k) * a(k);
    }
    if (std::abs(R_kept(i, i)) <= f.tol) {
      throw SingularSolveError("recall_x: triangular pivot " +
                               std::to_string(std::abs(R_kept(i, i))) +
                               " at row " + std::to_string(i + 1) +
                               " below tol");
    }
    a(i) = s / R_kept(i, i);
  }
  return Y_kept * a;
}

StateVector recall_raw(const EqcmmModel& model, const StateVector& x) {
  return recall(model.memory_z, x);
}

StateVector recall(const EqcmmModel& model, const StateVector& stimulus,
                   QueryMode mode) {
  switch (mode) {
    case QueryMode::ZQuery:
      return recall_z(model, stimulus);
    case QueryMode::XQuery:
      return recall_x(model, stimulus);
    case QueryMode::RawX:
      return recall_raw(model, stimulus);
  }
  throw DomainError("recall: unknown query mode");
}

}  // namespace eqcmm
