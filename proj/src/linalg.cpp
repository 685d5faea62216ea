#include "qmc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qmc/errors.hpp"

namespace qmc::linalg {

cplx frobenius_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("frobenius_inner: shape mismatch " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) + "x" +
                         std::to_string(y.cols()));
  }
  return (x.array().conjugate() * y.array()).sum();
}

double frobenius_norm(const ComplexMatrix& x) { return x.norm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexVector vec(const ComplexMatrix& x) { return x.reshaped(); }

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvec: vector of length " + std::to_string(v.size()) +
                         " cannot fill " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  return v.reshaped(rows, cols);
}

bool all_finite(const ComplexMatrix& x) {
  return x.real().allFinite() && x.imag().allFinite();
}

SchurResult eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eig: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  SchurResult out;
  if (m.rows() == 0) return out;
  Eigen::ComplexSchur<ComplexMatrix> schur(m.rows());
  schur.setMaxIterations(60 * m.rows());
  schur.compute(m, true);
  const ComplexMatrix& q = schur.matrixU();
  const ComplexMatrix& t = schur.matrixT();
  out.residual = (q * t * q.adjoint() - m).norm();
  if (schur.info() != Eigen::Success) {
    throw NumericalFailure("eig: shifted QR did not converge (residual " +
                           std::to_string(out.residual) + ")",
                           out.residual);
  }
  out.eigenvalues.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.eigenvalues.push_back(t(i, i));
  out.schur_basis = q;
  out.triangular = t;
  return out;
}

std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol) {
  std::vector<ComplexVector> basis;
  const Eigen::Index n = m.cols();
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (Eigen::Index j = 0; j < n; ++j) basis.push_back(ComplexVector::Unit(n, j));
    return basis;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const ComplexMatrix& v = svd.matrixV();
  const double cutoff = tol * (sigma.size() > 0 ? sigma(0) : 0.0);
  // Columns of V beyond the number of singular values span part of the kernel
  // when the matrix has fewer rows than columns.
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j >= sigma.size() || sigma(j) <= cutoff) basis.push_back(v.col(j));
  }
  return basis;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

ComplexMatrix projector(std::span<const ComplexVector> basis, Eigen::Index dim) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (const auto& b : basis) {
    if (b.size() != dim) throw DimensionError("projector: basis vector of wrong length");
    p += b * b.adjoint();
  }
  return p;
}

double subspace_distance(std::span<const ComplexVector> a, std::span<const ComplexVector> b,
                         Eigen::Index dim) {
  return (projector(a, dim) - projector(b, dim)).norm();
}

double subspace_distance(std::span<const ComplexMatrix> a, std::span<const ComplexMatrix> b) {
  Eigen::Index dim = 0;
  if (!a.empty()) dim = a.front().size();
  if (!b.empty()) {
    if (dim != 0 && dim != b.front().size()) {
      throw DimensionError("subspace_distance: bases live in different spaces");
    }
    dim = b.front().size();
  }
  std::vector<ComplexVector> va, vb;
  for (const auto& m : a) va.push_back(vec(m));
  for (const auto& m : b) vb.push_back(vec(m));
  return subspace_distance(va, vb, dim);
}

std::vector<int> cluster_values(std::span<const cplx> values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= tol) {
        const auto ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<int> label(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace qmc::linalg
