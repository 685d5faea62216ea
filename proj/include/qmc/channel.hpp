#pragma once

// Quantum operations in Kraus form, Phi(X) = sum_i A_i X A_i^dagger.

#include <string>
#include <vector>

#include "qmc/linalg.hpp"

namespace qmc {

inline constexpr double kDefaultValidationTol = 1e-10;
inline constexpr double kDensityTol = 1e-10;

struct ValidationReport {
  bool trace_preserving = false;
  double tp_residual = 0.0;      // ||sum A^dagger A - I||_F
  bool unital = false;
  double unital_residual = 0.0;  // ||sum A A^dagger - I||_F
  bool bistochastic = false;     // trace_preserving && unital
};

/// Ordered, nonempty list of square Kraus operators of one common dimension.
/// Redundant sets are kept as given.
class KrausSet {
 public:
  KrausSet(std::vector<ComplexMatrix> operators, std::string label = {});

  Eigen::Index dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const std::string& label() const noexcept { return label_; }

  /// Validation at the default tolerance, computed once at construction.
  const ValidationReport& validation() const noexcept { return validation_; }
  bool bistochastic() const noexcept { return validation_.bistochastic; }

 private:
  Eigen::Index dim_;
  std::vector<ComplexMatrix> operators_;
  std::string label_;
  ValidationReport validation_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Construction rejects
/// violations beyond the tolerance rather than repairing them.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho, double tol = kDensityTol);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index n);

  const ComplexMatrix& matrix() const noexcept { return rho_; }
  Eigen::Index dim() const noexcept { return rho_.rows(); }

 private:
  ComplexMatrix rho_;
};

struct Superoperator {
  static constexpr const char* kConvention = "column-stacking";
  Eigen::Index dim = 0;  // N; matrix is N^2 x N^2
  ComplexMatrix matrix;
};

ValidationReport kraus_validate(const KrausSet& k, double tol = kDefaultValidationTol);

/// sum_i A_i X A_i^dagger
ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& x);
DensityMatrix apply(const KrausSet& k, const DensityMatrix& rho);

/// sum_i A_i^dagger X A_i, the Hilbert-Schmidt adjoint of apply.
ComplexMatrix apply_adjoint(const KrausSet& k, const ComplexMatrix& x);

/// Matrix of Phi on column-stacked operators: sum_i kron(conj(A_i), A_i).
Superoperator superoperator(const KrausSet& k);

/// Induced Frobenius operator norm of Phi, the largest singular value of its
/// superoperator matrix.
double operator_norm(const KrausSet& k);

/// Throws NotBistochastic unless `k` passes validation at the default tolerance.
void require_bistochastic(const KrausSet& k, const char* context);

}  // namespace qmc
