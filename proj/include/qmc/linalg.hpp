#pragma once

// Dense complex linear algebra used by every other module. Matrices are
// Eigen column-major dense types; vectorisation stacks columns, so
//   vec(A X B) = kron(B^T, A) vec(X).

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qmc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace linalg {

/// Default relative rank tolerance: singular values <= tol * sigma_max are zero.
inline constexpr double kDefaultRankTol = 1e-10;

/// tr(X^dagger Y). Conjugate-linear in X, linear in Y.
cplx frobenius_inner(const ComplexMatrix& x, const ComplexMatrix& y);
double frobenius_norm(const ComplexMatrix& x);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix identity(Eigen::Index n);

ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

/// True when every entry is finite.
bool all_finite(const ComplexMatrix& x);

struct SchurResult {
  std::vector<cplx> eigenvalues;  // diagonal of the triangular factor
  ComplexMatrix schur_basis;      // unitary Q with M = Q T Q^dagger
  ComplexMatrix triangular;       // T
  double residual = 0.0;          // ||Q T Q^dagger - M||_F
};

/// Eigenvalues with algebraic multiplicity via Hessenberg reduction and
/// shifted QR to complex Schur form. Throws NumericalFailure if the QR
/// iteration does not converge.
SchurResult eig(const ComplexMatrix& m);

/// Orthonormal basis of the numerical kernel of `m`: right singular vectors
/// whose singular value is <= tol * sigma_max. A zero matrix has the whole
/// space as kernel.
std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol = kDefaultRankTol);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Modified Gram-Schmidt (with one re-orthogonalisation sweep) under the
/// Frobenius inner product. A vector is dropped when its residual norm falls
/// to <= tol times its original norm.
template <typename Dense>
std::vector<Dense> gram_schmidt(std::span<const Dense> vs, double tol = kDefaultRankTol) {
  std::vector<Dense> out;
  for (const auto& v : vs) {
    const double original = v.norm();
    if (original == 0.0) continue;
    Dense w = v;
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& q : out) {
        const cplx overlap = (q.array().conjugate() * w.array()).sum();
        w -= overlap * q;
      }
    }
    const double residual = w.norm();
    if (residual <= tol * original) continue;
    out.push_back(w / residual);
  }
  return out;
}

template <typename Dense>
std::vector<Dense> gram_schmidt(const std::vector<Dense>& vs, double tol = kDefaultRankTol) {
  return gram_schmidt(std::span<const Dense>(vs), tol);
}

/// Orthogonal projector onto the span of an orthonormal set of vectors.
ComplexMatrix projector(std::span<const ComplexVector> basis, Eigen::Index dim);

/// ||P1 - P2||_F between orthogonal projectors of two orthonormal bases.
double subspace_distance(std::span<const ComplexVector> a, std::span<const ComplexVector> b,
                         Eigen::Index dim);
double subspace_distance(std::span<const ComplexMatrix> a, std::span<const ComplexMatrix> b);

/// Single-linkage clustering of complex values: i and j share a cluster when
/// a chain of values with pairwise distance <= tol connects them. Returns the
/// cluster index of every value; clusters are numbered by first occurrence.
std::vector<int> cluster_values(std::span<const cplx> values, double tol);

}  // namespace linalg
}  // namespace qmc
