#pragma once

// Deterministic input builders shared by the test suites.

#include <Eigen/QR>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "eqcmm/ensembles.hpp"
#include "eqcmm/memory.hpp"
#include "eqcmm/state.hpp"

namespace testkit {

using eqcmm::Complex;
using eqcmm::ComplexMatrix;
using eqcmm::StateVector;

inline StateVector sv(std::initializer_list<Complex> amps) {
  StateVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amps) {
    v(i++) = a;
  }
  return v;
}

inline std::vector<StateVector> haar_keys(int m, int q, std::uint64_t seed) {
  eqcmm::EnsembleSpec spec;
  spec.kind = eqcmm::EnsembleKind::HaarRandom;
  spec.dim = m;
  spec.count = q;
  return eqcmm::generate(spec, eqcmm::Seed{seed});
}

inline std::vector<eqcmm::TrainingPair> haar_pairs(int m, int q,
                                                   std::uint64_t seed) {
  const auto keys = haar_keys(m, q, seed);
  const auto mems = haar_keys(m, q, seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<eqcmm::TrainingPair> pairs(q);
  for (int k = 0; k < q; ++k) {
    pairs[k] = eqcmm::TrainingPair{keys[k], mems[k]};
  }
  return pairs;
}

// Exactly orthonormal columns from a QR factorization of a Haar sample;
// independent of the library's own orthogonalisation.
inline std::vector<StateVector> orthonormal_keys(int m, int q,
                                                 std::uint64_t seed) {
  const auto raw = haar_keys(m, q, seed);
  ComplexMatrix a(m, q);
  for (int k = 0; k < q; ++k) {
    a.col(k) = raw[k];
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix thin_q =
      qr.householderQ() * ComplexMatrix::Identity(m, q);
  std::vector<StateVector> keys(q);
  for (int k = 0; k < q; ++k) {
    keys[k] = thin_q.col(k);
  }
  return keys;
}

// Unit-norm key set with a controlled singular-value spread.
inline std::vector<StateVector> conditioned_keys(int m, int q, double kappa,
                                                 std::uint64_t seed) {
  const auto left = orthonormal_keys(m, q, seed);
  const auto right = orthonormal_keys(q, q, seed ^ 0xD1B54A32D192ED03ull);
  ComplexMatrix u(m, q), v(q, q);
  for (int k = 0; k < q; ++k) {
    u.col(k) = left[k];
    v.col(k) = right[k];
  }
  Eigen::VectorXd sigma(q);
  for (int k = 0; k < q; ++k) {
    const double t = q > 1 ? static_cast<double>(k) / (q - 1) : 0.0;
    sigma(k) = std::pow(kappa, -t);
  }
  ComplexMatrix x = u * sigma.asDiagonal() * v.adjoint();
  std::vector<StateVector> keys(q);
  for (int k = 0; k < q; ++k) {
    keys[k] = eqcmm::normalize(x.col(k));
  }
  return keys;
}

// The classic ill-conditioned family: h(i, j) = 1 / (i + j - 1), columns
// normalized.
inline std::vector<StateVector> hilbert_keys(int n) {
  std::vector<StateVector> keys(n);
  for (int j = 0; j < n; ++j) {
    StateVector col(n);
    for (int i = 0; i < n; ++i) {
      col(i) = Complex(1.0 / (i + j + 1), 0.0);
    }
    keys[j] = eqcmm::normalize(col);
  }
  return keys;
}

}  // namespace testkit
