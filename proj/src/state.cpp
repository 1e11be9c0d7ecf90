#include "eqcmm/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace eqcmm {

StateVector bloch_to_state(const BlochAngles& angles) {
  const double theta = angles.theta;
  const double phi = angles.phi;
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError("bloch_to_state: theta " + std::to_string(theta) +
                      " outside [0, pi]");
  }
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
    throw DomainError("bloch_to_state: phi " + std::to_string(phi) +
                      " outside [0, 2*pi)");
  }
  StateVector v(2);
  v(0) = Complex(std::cos(theta / 2.0), 0.0);
  v(1) = std::polar(std::sin(theta / 2.0), phi);
  return v;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw ShapeError("inner: dimension mismatch " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
  return a.dot(b);  // Eigen conjugates the first operand
}

double energy(const StateVector& v) { return inner(v, v).real(); }

StateVector normalize(const StateVector& v) {
  const double e = energy(v);
  if (e <= kEpsZero) {
    throw ZeroVectorError("normalize: energy " + std::to_string(e) +
                          " below zero threshold");
  }
  return v / std::sqrt(e);
}

Complex cosine(const StateVector& a, const StateVector& b) {
  const double ea = energy(a);
  const double eb = energy(b);
  if (ea <= kEpsZero || eb <= kEpsZero) {
    throw ZeroVectorError("cosine: zero vector operand");
  }
  return inner(a, b) / (std::sqrt(ea) * std::sqrt(eb));
}

ComplexMatrix outer(const StateVector& y, const StateVector& x) {
  return y * x.adjoint();
}

bool is_finite(const StateVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
      return false;
    }
  }
  return true;
}

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

void require_unit_energy(const StateVector& v, const char* what) {
  const double e = energy(v);
  if (std::abs(e - 1.0) > kUnitEnergyTol) {
    throw EnergyError(std::string(what) + ": energy " + std::to_string(e) +
                      " is not 1 within " + std::to_string(kUnitEnergyTol));
  }
}

}  // namespace eqcmm
