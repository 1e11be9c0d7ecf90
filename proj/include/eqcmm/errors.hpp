#pragma once

#include <stdexcept>
#include <string>

namespace eqcmm {

// Error taxonomy shared by the library, the CLI and the python bindings.
// exit_code() is the process exit code the CLI maps each class to:
//   2 usage, 3 data/shape, 4 numerical/degenerate, 5 I/O.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual int exit_code() const { return 1; }
};

// Invalid argument values: out-of-range angles, empty inputs, bad specs.
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

// Dimension mismatches between vectors / matrices.
class ShapeError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

// Operation on a (numerically) zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

// Key violates the unit-energy training policy.
class EnergyError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

// Orthogonalisation dropped every input vector.
class DegenerateSetError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

// Back-substitution hit a (near-)zero pivot.
class SingularSolveError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

class IoError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 5; }
};

}  // namespace eqcmm
