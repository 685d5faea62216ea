#pragma once

// Long-time behaviour of the quantum Markov chain rho(t) = Phi^t rho(0).

#include <optional>
#include <vector>

#include "qmc/spectral.hpp"

namespace qmc {

/// The four limiting-behaviour categories:
///   1: strict limit I/N for every start       (|Lambda_1| = 1, g1 = 1)
///   2: strict limit depends on the start      (|Lambda_1| = 1, g1 >= 2)
///   3: Cesàro limit I/N, no strict limit      (|Lambda_1| >= 2, g1 = 1)
///   4: Cesàro limit depends on the start      (|Lambda_1| >= 2, g1 >= 2)
struct ChannelClass {
  int category = 0;
  int peripheral_count = 0;
  int g1 = 0;
  SpectralData evidence;
};

struct Trajectory {
  std::vector<DensityMatrix> states;        // rho(1) .. rho(t)
  std::vector<double> distances_to_limit;   // empty without a reference
};

struct EvolveOptions {
  std::optional<DensityMatrix> reference;
  /// Stop once ||rho(n) - rho(n-1)|| < 1e-12 for 5 consecutive steps.
  bool early_stop = false;
};

/// Category from peripheral count and g(1).
int category_of(int peripheral_count, int g1);

/// sum_l tr(Z_l^dagger X) Z_l over an orthonormal basis {Z_l}.
ComplexMatrix project_onto(std::span<const ComplexMatrix> basis, const ComplexMatrix& x);

/// lim Phi^t rho0. Throws PeripheralObstruction when eigenvalues other than 1
/// sit on the unit circle.
DensityMatrix strict_limit(const KrausSet& k, const DensityMatrix& rho0,
                           const SpectralOptions& opts = {});

/// lim (1/t) sum_{n=1..t} Phi^n rho0, computed as the orthogonal projection of
/// rho0 onto the fixed-point space.
DensityMatrix cesaro_limit(const KrausSet& k, const DensityMatrix& rho0,
                           const SpectralOptions& opts = {});

ChannelClass classify(const KrausSet& k, const SpectralOptions& opts = {});

Trajectory evolve(const KrausSet& k, const DensityMatrix& rho0, int steps,
                  const EvolveOptions& opts = {});

/// Brute-force running average (1/t) sum_{n=1..t} Phi^n rho0.
DensityMatrix empirical_cesaro(const KrausSet& k, const DensityMatrix& rho0, int steps);

}  // namespace qmc
