#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter is outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix offered as a density matrix is not Hermitian, unit trace and PSD.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Malformed channel, state or walk file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The Kraus set is not both trace preserving and unital.
class NotBistochastic : public Error {
 public:
  NotBistochastic(const std::string& what, double tp_residual, double unital_residual)
      : Error(what), tp_residual_(tp_residual), unital_residual_(unital_residual) {}
  double tp_residual() const noexcept { return tp_residual_; }
  double unital_residual() const noexcept { return unital_residual_; }

 private:
  double tp_residual_;
  double unital_residual_;
};

/// The channel has peripheral eigenvalues other than 1, so powers need not
/// converge. The Cesàro limit is still available.
class PeripheralObstruction : public Error {
 public:
  PeripheralObstruction(const std::string& what, std::vector<std::complex<double>> peripheral)
      : Error(what), peripheral_(std::move(peripheral)) {}
  const std::vector<std::complex<double>>& peripheral() const noexcept { return peripheral_; }

 private:
  std::vector<std::complex<double>> peripheral_;
};

/// An iterative kernel failed to converge or produced an unusable result.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qmc
