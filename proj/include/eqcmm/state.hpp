#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eqcmm/errors.hpp"

namespace eqcmm {

using Complex = std::complex<double>;

// Column vector of complex amplitudes; carries kets like |x_k>, |y_k>, |z_k>.
using StateVector = Eigen::VectorXcd;

// Dense complex matrix; carries memories, key/memorized matrices and factors.
using ComplexMatrix = Eigen::MatrixXcd;

// Energy below this counts as the zero vector.
inline constexpr double kEpsZero = 1e-14;

// Default drop tolerance for orthogonalisation.
inline constexpr double kDefaultTol = 1e-10;

// Slack allowed on |E_k - 1| when a unit-energy key is required.
inline constexpr double kUnitEnergyTol = 1e-8;

// Polar parametrisation of a qubit: theta in [0, pi], phi in [0, 2*pi).
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

// [cos(theta/2), sin(theta/2) e^{i phi}]; always unit energy.
StateVector bloch_to_state(const BlochAngles& angles);

// Hermitian inner product <a|b>, conjugate-linear in the FIRST argument.
Complex inner(const StateVector& a, const StateVector& b);

// Squared Euclidean norm <v|v>.
double energy(const StateVector& v);

// v / sqrt(energy(v)); throws ZeroVectorError when energy <= kEpsZero.
StateVector normalize(const StateVector& v);

// <a|b> / (|a| |b|); complex overlap whose modulus is the fidelity-like
// magnitude reported elsewhere.
Complex cosine(const StateVector& a, const StateVector& b);

// |y><x|: entry (i, j) = y_i * conj(x_j). Rank 1 for nonzero inputs.
ComplexMatrix outer(const StateVector& y, const StateVector& x);

// True when every component of v is finite.
bool is_finite(const StateVector& v);
bool is_finite(const ComplexMatrix& m);

// Throws EnergyError unless |energy(v) - 1| <= kUnitEnergyTol.
void require_unit_energy(const StateVector& v, const char* what);

}  // namespace eqcmm
