#include "qmc/channel.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

void check_square_operand(const KrausSet& k, const ComplexMatrix& x, const char* context) {
  if (x.rows() != k.dim() || x.cols() != k.dim()) {
    throw DimensionError(std::string(context) + ": operand is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + ", channel acts on " +
                         std::to_string(k.dim()) + "x" + std::to_string(k.dim()));
  }
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> operators, std::string label)
    : dim_(0), operators_(std::move(operators)), label_(std::move(label)) {
  if (operators_.empty()) throw DimensionError("KrausSet: at least one operator is required");
  dim_ = operators_.front().rows();
  if (dim_ == 0) throw DimensionError("KrausSet: operators must be at least 1x1");
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    const auto& a = operators_[i];
    if (a.rows() != dim_ || a.cols() != dim_) {
      throw DimensionError("KrausSet: operator " + std::to_string(i) + " is " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           ", expected " + std::to_string(dim_) + "x" + std::to_string(dim_));
    }
    if (!linalg::all_finite(a)) {
      throw DomainError("KrausSet: operator " + std::to_string(i) + " has non-finite entries");
    }
  }
  validation_ = kraus_validate(*this);
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, double tol) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw InvalidState("density matrix must be square and nonempty");
  }
  if (!linalg::all_finite(rho_)) throw InvalidState("density matrix has non-finite entries");
  const double herm = (rho_ - rho_.adjoint()).norm();
  if (herm > tol) {
    throw InvalidState("density matrix is not Hermitian (||rho - rho^dagger|| = " +
                       std::to_string(herm) + ")");
  }
  const cplx tr = rho_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()) + "+" +
                       std::to_string(tr.imag()) + "i, expected 1");
  }
  const ComplexMatrix h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(min_eig) + ")");
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > kDensityTol) {
    throw InvalidState("pure state vector must have unit norm, got " + std::to_string(n));
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index n) {
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

ValidationReport kraus_validate(const KrausSet& k, double tol) {
  if (!(tol > 0.0)) throw DomainError("kraus_validate: tolerance must be positive");
  const Eigen::Index n = k.dim();
  ComplexMatrix tp = -ComplexMatrix::Identity(n, n);
  ComplexMatrix un = -ComplexMatrix::Identity(n, n);
  for (const auto& a : k.operators()) {
    tp.noalias() += a.adjoint() * a;
    un.noalias() += a * a.adjoint();
  }
  ValidationReport r;
  r.tp_residual = tp.norm();
  r.unital_residual = un.norm();
  r.trace_preserving = r.tp_residual <= tol;
  r.unital = r.unital_residual <= tol;
  r.bistochastic = r.trace_preserving && r.unital;
  return r;
}

ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& x) {
  check_square_operand(k, x, "apply");
  ComplexMatrix out = ComplexMatrix::Zero(k.dim(), k.dim());
  for (const auto& a : k.operators()) out.noalias() += a * x * a.adjoint();
  return out;
}

DensityMatrix apply(const KrausSet& k, const DensityMatrix& rho) {
  return DensityMatrix(qmc::apply(k, rho.matrix()));
}

ComplexMatrix apply_adjoint(const KrausSet& k, const ComplexMatrix& x) {
  check_square_operand(k, x, "apply_adjoint");
  ComplexMatrix out = ComplexMatrix::Zero(k.dim(), k.dim());
  for (const auto& a : k.operators()) out.noalias() += a.adjoint() * x * a;
  return out;
}

Superoperator superoperator(const KrausSet& k) {
  const Eigen::Index n = k.dim();
  Superoperator s;
  s.dim = n;
  s.matrix = ComplexMatrix::Zero(n * n, n * n);
  for (const auto& a : k.operators()) s.matrix += linalg::kron(a.conjugate(), a);
  return s;
}

double operator_norm(const KrausSet& k) { return linalg::spectral_norm(superoperator(k).matrix); }

void require_bistochastic(const KrausSet& k, const char* context) {
  const auto& v = k.validation();
  if (v.bistochastic) return;
  throw NotBistochastic(std::string(context) + ": channel '" + k.label() +
                            "' is not bistochastic (trace-preserving residual " +
                            std::to_string(v.tp_residual) + ", unital residual " +
                            std::to_string(v.unital_residual) + ")",
                        v.tp_residual, v.unital_residual);
}

}  // namespace qmc
