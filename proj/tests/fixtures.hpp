#pragma once

// Shared fixtures and test-only oracles. Nothing here calls into the spectral
// or limits modules, so these routes stay independent of the code under test.

#include <cmath>
#include <vector>

#include "qmc/catalog.hpp"
#include "qmc/channel.hpp"
#include "qmc/linalg.hpp"

namespace qmc::test {

inline ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline ComplexMatrix diag(std::initializer_list<cplx> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (cplx v : values) m(i, i) = v, ++i;
  return m;
}

inline KrausSet z_conjugation() { return KrausSet({catalog::pauli_z()}, "z_conjugation"); }

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, catalog::Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      m(i, j) = cplx(re, normal(rng));
    }
  }
  return m;
}

/// The six catalog channels at default parameters plus the Z conjugation.
inline std::vector<KrausSet> named_channels() {
  std::vector<KrausSet> out;
  for (const auto& e : catalog::entries()) out.push_back(catalog::build(e.name));
  out.push_back(z_conjugation());
  return out;
}

/// 50 seeded random unitary mixtures, N alternating between 2 and 3.
inline std::vector<KrausSet> random_mixtures(int count = 50,
                                             std::uint64_t seed = catalog::kDefaultSeed) {
  catalog::Rng rng(seed);
  std::vector<KrausSet> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(catalog::random_unitary_mixture(2 + i % 2, 2 + i % 3, rng));
  }
  return out;
}

/// Brute-force Cesàro projector (1/T) sum_{n=1..T} [Phi]^n, built by repeated
/// multiplication. Converges to the projector onto the fixed space at rate 1/T.
inline ComplexMatrix averaged_powers(const ComplexMatrix& phi, int horizon) {
  ComplexMatrix power = ComplexMatrix::Identity(phi.rows(), phi.cols());
  ComplexMatrix sum = ComplexMatrix::Zero(phi.rows(), phi.cols());
  for (int n = 1; n <= horizon; ++n) {
    power = phi * power;
    sum += power;
  }
  return sum / static_cast<double>(horizon);
}

/// Projector onto span(basis) with each matrix column-stacked.
inline ComplexMatrix span_projector(const std::vector<ComplexMatrix>& basis, Eigen::Index n) {
  ComplexMatrix p = ComplexMatrix::Zero(n * n, n * n);
  for (const auto& z : basis) {
    const ComplexVector v = z.reshaped();
    p += v * v.adjoint();
  }
  return p;
}

}  // namespace qmc::test
