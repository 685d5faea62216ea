#pragma once

// Spectral analysis of bistochastic channels: peripheral eigenvalues, the
// fixed-point space, Jordan-structure and orthogonality diagnostics.

#include <optional>
#include <vector>

#include "qmc/channel.hpp"

namespace qmc {

struct SpectralOptions {
  double peripheral_tol = 1e-8;  // |lambda| >= 1 - peripheral_tol is peripheral
  double cluster_tol = 1e-7;     // single-linkage distance for multiplicity counting
  double rank_tol = linalg::kDefaultRankTol;
};

struct EigenCluster {
  cplx value;        // mean of members; projected onto |z| = 1 when peripheral
  int multiplicity;  // algebraic multiplicity (cluster size)
};

struct SpectralData {
  Eigen::Index dim = 0;               // N, so there are N^2 eigenvalues
  std::vector<cplx> eigenvalues;      // modulus descending, then phase ascending
  std::vector<EigenCluster> peripheral;
  std::vector<EigenCluster> interior;
  std::vector<ComplexMatrix> fixed_space_basis;  // orthonormal Z_1..Z_g1
  int g1 = 0;
  double schur_residual = 0.0;

  /// True when 1 is the only peripheral eigenvalue.
  bool peripheral_is_unit_only() const;
};

struct JordanDiagnostic {
  cplx lambda;
  int m = 0;   // cluster size
  int g = 0;   // dim ker(Phi - lambda)
  int g2 = 0;  // dim ker((Phi - lambda)^2)
  bool diagonalizable_at_lambda = false;
};

struct ConjectureResult {
  cplx lambda;
  std::vector<ComplexMatrix> basis;            // solutions of X A_i = lambda A_i X
  std::vector<ComplexMatrix> numerical_basis;  // ker(Phi - lambda)
  double distance = 0.0;                       // projector distance between the two
  bool agrees_with_numerical = false;
  /// Projector distance from `basis` to ker(Phi - conj(lambda)). The
  /// commutation relation X A = lambda A X makes X an eigenvector for
  /// conj(lambda), so this is the distance that vanishes when lambda is not real.
  double conjugate_distance = 0.0;
};

struct OverlapEntry {
  cplx lambda;
  bool peripheral = false;
  int subspace_dim = 0;
  double max_overlap = 0.0;
};

struct OrthogonalityReport {
  std::vector<OverlapEntry> entries;
  double max_overlap = 0.0;
  bool passed = true;
};

/// Sort order used for all reported eigenvalue lists.
void sort_spectrum(std::vector<cplx>& values);

SpectralData spectrum(const KrausSet& k, const SpectralOptions& opts = {});

/// Orthonormal basis of { X : X A_i = A_i X for all i }, from the SVD kernel
/// of the stacked system (A_i^T (x) I - I (x) A_i) vec(X) = 0.
std::vector<ComplexMatrix> fixed_space_commutant(const KrausSet& k,
                                                 double rank_tol = linalg::kDefaultRankTol);

/// Orthonormal basis of ker([Phi] - lambda I) reshaped to N x N matrices.
std::vector<ComplexMatrix> eigenspace(const Superoperator& s, cplx lambda, double rank_tol);

ConjectureResult conjecture_eigenspace(const KrausSet& k, cplx lambda,
                                       const SpectralOptions& opts = {});

JordanDiagnostic jordan_diagnostic(const KrausSet& k, cplx lambda, double rank_tol = 1e-8,
                                   const SpectralOptions& opts = {});

/// Max |<Z, Y>| between the fixed-space basis and (a) each peripheral
/// eigenspace other than lambda = 1, (b) each interior invariant subspace
/// ker(([Phi] - alpha I)^m(alpha)).
OrthogonalityReport orthogonality_check(const KrausSet& k, double bound = 1e-8,
                                        double rank_tol = 1e-8, const SpectralOptions& opts = {});

}  // namespace qmc
