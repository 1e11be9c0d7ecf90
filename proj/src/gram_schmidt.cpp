#include "eqcmm/gram_schmidt.hpp"

#include <cmath>
#include <string>

namespace eqcmm {

GSFactors gram_schmidt(const std::vector<StateVector>& keys, GSMode mode,
                       double tol, bool reorthogonalize) {
  if (keys.empty()) {
    throw DomainError("gram_schmidt: empty key list");
  }
  if (!(tol > 0.0)) {
    throw DomainError("gram_schmidt: tol must be positive");
  }
  const Eigen::Index m = keys.front().size();
  const int q = static_cast<int>(keys.size());
  for (const auto& k : keys) {
    if (k.size() != m) {
      throw ShapeError("gram_schmidt: keys have mixed dimensions");
    }
  }

  const Eigen::Index max_rank = std::min<Eigen::Index>(m, q);
  ComplexMatrix Z(m, max_rank);
  ComplexMatrix R = ComplexMatrix::Zero(max_rank, q);

  GSFactors f;
  f.tol = tol;
  int r = 0;
  for (int k = 0; k < q; ++k) {
    const StateVector& x = keys[k];
    const double xnorm = std::sqrt(energy(x));
    if (k == 0 && energy(x) <= kEpsZero) {
      throw ZeroVectorError("gram_schmidt: first key has zero energy");
    }

    StateVector v = x;
    auto sweep = [&](StateVector& w) {
      if (mode == GSMode::Classical) {
        // coefficients against the incoming vector, subtracted en bloc
        Eigen::VectorXcd c = Z.leftCols(r).adjoint() * w;
        w -= Z.leftCols(r) * c;
        return c;
      }
      Eigen::VectorXcd c(r);
      for (int i = 0; i < r; ++i) {
        c(i) = Z.col(i).dot(w);
        w -= c(i) * Z.col(i);
      }
      return c;
    };

    Eigen::VectorXcd coeffs = sweep(v);
    if (reorthogonalize && r > 0) {
      coeffs += sweep(v);
    }
    if (r > 0) {
      R.block(0, k, r, 1) = coeffs;
    }

    const double resid = std::sqrt(energy(v));
    if (resid <= tol * xnorm) {
      f.dropped.push_back(k + 1);
      continue;
    }
    R(r, k) = resid;
    Z.col(r) = v / resid;
    ++r;
  }

  if (r == 0) {
    throw DegenerateSetError("gram_schmidt: all " + std::to_string(q) +
                             " keys dropped as dependent");
  }
  f.rank = r;
  f.Z = Z.leftCols(r);
  f.R = R.topRows(r);
  return f;
}

double orthonormality_residual(const ComplexMatrix& Z) {
  const Eigen::Index r = Z.cols();
  if (r == 0) {
    return 0.0;
  }
  ComplexMatrix G = Z.adjoint() * Z;
  G -= ComplexMatrix::Identity(r, r);
  return G.cwiseAbs().maxCoeff();
}

double orthonormality_residual(const std::vector<StateVector>& keys) {
  if (keys.empty()) {
    throw DomainError("orthonormality_residual: empty key list");
  }
  const Eigen::Index m = keys.front().size();
  ComplexMatrix Z(m, static_cast<Eigen::Index>(keys.size()));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (keys[k].size() != m) {
      throw ShapeError("orthonormality_residual: keys have mixed dimensions");
    }
    Z.col(static_cast<Eigen::Index>(k)) = keys[k];
  }
  return orthonormality_residual(Z);
}

ComplexMatrix reconstruct(const GSFactors& f) { return f.Z * f.R; }

}  // namespace eqcmm
