#include "qmc/limits.hpp"

#include <string>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

void check_state_dim(const KrausSet& k, const DensityMatrix& rho, const char* context) {
  if (rho.dim() != k.dim()) {
    throw DimensionError(std::string(context) + ": state is " + std::to_string(rho.dim()) +
                         "-dimensional, channel acts on dimension " + std::to_string(k.dim()));
  }
}

}  // namespace

int category_of(int peripheral_count, int g1) {
  if (peripheral_count < 1 || g1 < 1) {
    throw DomainError("category_of: peripheral count and g(1) must be positive");
  }
  if (peripheral_count == 1) return g1 == 1 ? 1 : 2;
  return g1 == 1 ? 3 : 4;
}

ComplexMatrix project_onto(std::span<const ComplexMatrix> basis, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& z : basis) out += linalg::frobenius_inner(z, x) * z;
  return out;
}

DensityMatrix strict_limit(const KrausSet& k, const DensityMatrix& rho0,
                           const SpectralOptions& opts) {
  check_state_dim(k, rho0, "strict_limit");
  const SpectralData sd = spectrum(k, opts);
  if (!sd.peripheral_is_unit_only()) {
    std::vector<cplx> values;
    for (const auto& c : sd.peripheral) values.push_back(c.value);
    const std::string what = "strict_limit: " + std::to_string(values.size()) +
                             " distinct peripheral eigenvalues; powers of the channel need not "
                             "converge, use the Cesaro limit instead";
    throw PeripheralObstruction(what, std::move(values));
  }
  return DensityMatrix(project_onto(sd.fixed_space_basis, rho0.matrix()));
}

DensityMatrix cesaro_limit(const KrausSet& k, const DensityMatrix& rho0,
                           const SpectralOptions& opts) {
  check_state_dim(k, rho0, "cesaro_limit");
  const SpectralData sd = spectrum(k, opts);
  return DensityMatrix(project_onto(sd.fixed_space_basis, rho0.matrix()));
}

ChannelClass classify(const KrausSet& k, const SpectralOptions& opts) {
  ChannelClass c;
  c.evidence = spectrum(k, opts);
  c.peripheral_count = static_cast<int>(c.evidence.peripheral.size());
  c.g1 = c.evidence.g1;
  c.category = category_of(c.peripheral_count, c.g1);
  return c;
}

Trajectory evolve(const KrausSet& k, const DensityMatrix& rho0, int steps,
                  const EvolveOptions& opts) {
  require_bistochastic(k, "evolve");
  check_state_dim(k, rho0, "evolve");
  if (steps < 1) throw DomainError("evolve: step count must be at least 1");
  if (opts.reference) check_state_dim(k, *opts.reference, "evolve reference");

  Trajectory traj;
  traj.states.reserve(static_cast<std::size_t>(steps));
  ComplexMatrix current = rho0.matrix();
  int quiet_steps = 0;
  for (int t = 1; t <= steps; ++t) {
    ComplexMatrix next = qmc::apply(k, current);
    const double step_size = (next - current).norm();
    traj.states.emplace_back(next);
    if (opts.reference) traj.distances_to_limit.push_back((next - opts.reference->matrix()).norm());
    current = std::move(next);
    quiet_steps = step_size < 1e-12 ? quiet_steps + 1 : 0;
    if (opts.early_stop && quiet_steps >= 5) break;
  }
  return traj;
}

DensityMatrix empirical_cesaro(const KrausSet& k, const DensityMatrix& rho0, int steps) {
  check_state_dim(k, rho0, "empirical_cesaro");
  if (steps < 1) throw DomainError("empirical_cesaro: step count must be at least 1");
  ComplexMatrix current = rho0.matrix();
  ComplexMatrix sum = ComplexMatrix::Zero(k.dim(), k.dim());
  for (int t = 1; t <= steps; ++t) {
    current = qmc::apply(k, current);
    sum += current;
  }
  return DensityMatrix(sum / static_cast<double>(steps));
}

}  // namespace qmc
