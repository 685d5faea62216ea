#include "qmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

double normalized_phase(cplx z) {
  double phase = std::arg(z);
  if (phase <= -std::numbers::pi + 1e-12) phase = std::numbers::pi;
  return phase;
}

struct ClusterSet {
  std::vector<int> label;             // cluster of every eigenvalue
  std::vector<EigenCluster> clusters;  // indexed by label
  std::vector<bool> is_peripheral;
};

ClusterSet cluster_spectrum(const std::vector<cplx>& values, const SpectralOptions& opts) {
  ClusterSet cs;
  cs.label = linalg::cluster_values(values, opts.cluster_tol);
  const int count = values.empty() ? 0 : *std::max_element(cs.label.begin(), cs.label.end()) + 1;
  std::vector<cplx> sum(static_cast<std::size_t>(count), cplx{0.0, 0.0});
  std::vector<int> size(static_cast<std::size_t>(count), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum[static_cast<std::size_t>(cs.label[i])] += values[i];
    ++size[static_cast<std::size_t>(cs.label[i])];
  }
  for (int c = 0; c < count; ++c) {
    const auto ci = static_cast<std::size_t>(c);
    cplx mean = sum[ci] / static_cast<double>(size[ci]);
    const bool peripheral = std::abs(mean) >= 1.0 - opts.peripheral_tol;
    if (peripheral) mean /= std::abs(mean);
    cs.clusters.push_back({mean, size[ci]});
    cs.is_peripheral.push_back(peripheral);
  }
  return cs;
}

bool spectrum_less(cplx a, cplx b) {
  const double ma = std::round(std::abs(a) * 1e9), mb = std::round(std::abs(b) * 1e9);
  if (ma != mb) return ma > mb;
  return std::round(normalized_phase(a) * 1e9) < std::round(normalized_phase(b) * 1e9);
}

void sort_clusters(std::vector<EigenCluster>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const EigenCluster& a, const EigenCluster& b) {
    return spectrum_less(a.value, b.value);
  });
}

ComplexMatrix shifted(const ComplexMatrix& m, cplx lambda) {
  return m - lambda * ComplexMatrix::Identity(m.rows(), m.cols());
}

std::vector<ComplexMatrix> to_matrices(const std::vector<ComplexVector>& vs, Eigen::Index n) {
  std::vector<ComplexMatrix> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(linalg::unvec(v, n, n));
  return out;
}

double max_overlap(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  double worst = 0.0;
  for (const auto& z : a) {
    for (const auto& y : b) worst = std::max(worst, std::abs(linalg::frobenius_inner(z, y)));
  }
  return worst;
}

ComplexMatrix commutation_system(const KrausSet& k, cplx lambda) {
  const Eigen::Index n = k.dim();
  const Eigen::Index n2 = n * n;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix stacked(static_cast<Eigen::Index>(k.size()) * n2, n2);
  Eigen::Index row = 0;
  for (const auto& a : k.operators()) {
    // vec(X A) = (A^T (x) I) vec(X), vec(A X) = (I (x) A) vec(X)
    stacked.middleRows(row, n2) = linalg::kron(a.transpose(), id) - lambda * linalg::kron(id, a);
    row += n2;
  }
  return stacked;
}

}  // namespace

void sort_spectrum(std::vector<cplx>& values) {
  std::stable_sort(values.begin(), values.end(), spectrum_less);
}

bool SpectralData::peripheral_is_unit_only() const {
  return peripheral.size() == 1 && std::abs(peripheral.front().value - 1.0) <= 1e-7;
}

std::vector<ComplexMatrix> eigenspace(const Superoperator& s, cplx lambda, double rank_tol) {
  return to_matrices(linalg::nullspace(shifted(s.matrix, lambda), rank_tol), s.dim);
}

SpectralData spectrum(const KrausSet& k, const SpectralOptions& opts) {
  require_bistochastic(k, "spectrum");
  const Superoperator s = superoperator(k);
  const auto schur = linalg::eig(s.matrix);

  SpectralData out;
  out.dim = k.dim();
  out.schur_residual = schur.residual;
  out.eigenvalues = schur.eigenvalues;
  sort_spectrum(out.eigenvalues);

  const ClusterSet cs = cluster_spectrum(out.eigenvalues, opts);
  for (std::size_t c = 0; c < cs.clusters.size(); ++c) {
    (cs.is_peripheral[c] ? out.peripheral : out.interior).push_back(cs.clusters[c]);
  }
  sort_clusters(out.peripheral);
  sort_clusters(out.interior);

  const auto kernel = linalg::nullspace(shifted(s.matrix, 1.0), opts.rank_tol);
  out.fixed_space_basis = linalg::gram_schmidt(to_matrices(kernel, k.dim()), opts.rank_tol);
  out.g1 = static_cast<int>(out.fixed_space_basis.size());
  if (out.g1 == 0) {
    throw NumericalFailure("spectrum: eigenvalue 1 not resolved for a bistochastic channel",
                           schur.residual);
  }
  return out;
}

std::vector<ComplexMatrix> fixed_space_commutant(const KrausSet& k, double rank_tol) {
  require_bistochastic(k, "fixed_space_commutant");
  return to_matrices(linalg::nullspace(commutation_system(k, 1.0), rank_tol), k.dim());
}

ConjectureResult conjecture_eigenspace(const KrausSet& k, cplx lambda,
                                       const SpectralOptions& opts) {
  if (std::abs(std::abs(lambda) - 1.0) > opts.peripheral_tol) {
    throw DomainError("conjecture_eigenspace: |lambda| = " + std::to_string(std::abs(lambda)) +
                      " is not on the unit circle");
  }
  const Superoperator s = superoperator(k);
  ConjectureResult r;
  r.lambda = lambda;
  r.basis = to_matrices(linalg::nullspace(commutation_system(k, lambda), opts.rank_tol), k.dim());
  r.numerical_basis = eigenspace(s, lambda, opts.rank_tol);
  r.distance = linalg::subspace_distance(std::span<const ComplexMatrix>(r.basis),
                                         std::span<const ComplexMatrix>(r.numerical_basis));
  const auto conj_basis = eigenspace(s, std::conj(lambda), opts.rank_tol);
  r.conjugate_distance = linalg::subspace_distance(std::span<const ComplexMatrix>(r.basis),
                                                   std::span<const ComplexMatrix>(conj_basis));
  r.agrees_with_numerical = r.distance <= 1e-8;
  return r;
}

JordanDiagnostic jordan_diagnostic(const KrausSet& k, cplx lambda, double rank_tol,
                                   const SpectralOptions& opts) {
  const Superoperator s = superoperator(k);
  const auto values = linalg::eig(s.matrix).eigenvalues;
  std::size_t nearest = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (std::abs(values[i] - lambda) < std::abs(values[nearest] - lambda)) nearest = i;
  }
  if (values.empty() || std::abs(values[nearest] - lambda) > 1e-6) {
    throw DomainError("jordan_diagnostic: lambda is not within 1e-6 of any eigenvalue");
  }
  const ClusterSet cs = cluster_spectrum(values, opts);
  const auto& cluster = cs.clusters[static_cast<std::size_t>(cs.label[nearest])];

  JordanDiagnostic d;
  d.lambda = cluster.value;
  d.m = cluster.multiplicity;
  const ComplexMatrix shift = shifted(s.matrix, cluster.value);
  d.g = static_cast<int>(linalg::nullspace(shift, rank_tol).size());
  d.g2 = static_cast<int>(linalg::nullspace(shift * shift, rank_tol).size());
  d.diagonalizable_at_lambda = d.g == d.g2;
  return d;
}

OrthogonalityReport orthogonality_check(const KrausSet& k, double bound, double rank_tol,
                                        const SpectralOptions& opts) {
  const SpectralData sd = spectrum(k, opts);
  const Superoperator s = superoperator(k);
  OrthogonalityReport report;
  auto record = [&](const EigenCluster& c, bool peripheral, std::vector<ComplexMatrix> space) {
    OverlapEntry e;
    e.lambda = c.value;
    e.peripheral = peripheral;
    e.subspace_dim = static_cast<int>(space.size());
    e.max_overlap = max_overlap(sd.fixed_space_basis, space);
    report.max_overlap = std::max(report.max_overlap, e.max_overlap);
    if (e.max_overlap > bound) report.passed = false;
    report.entries.push_back(e);
  };
  for (const auto& c : sd.peripheral) {
    if (std::abs(c.value - 1.0) <= opts.cluster_tol) continue;
    record(c, true, eigenspace(s, c.value, rank_tol));
  }
  for (const auto& c : sd.interior) {
    const ComplexMatrix shift = shifted(s.matrix, c.value);
    ComplexMatrix power = shift;
    for (int i = 1; i < c.multiplicity; ++i) power = power * shift;
    record(c, false, to_matrices(linalg::nullspace(power, rank_tol), k.dim()));
  }
  return report;
}

}  // namespace qmc
