#pragma once

// Discrete-time coined quantum walks on port-labelled regular graphs.
//
// The walk space is coin (x) position with basis index a * V + v for coin
// value a and node v. Port a at node v leads along a directed edge to node w,
// entering w through port b; the shift sends |a, v> to |b, w>. On cycle(N)
// port 0 points to v + 1 and port 1 to v - 1, so
//   S|0, v> = |1, v + 1>,   S|1, v> = |0, v - 1>.

#include <utility>
#include <variant>
#include <vector>

#include "qmc/channel.hpp"

namespace qmc {

struct PortTarget {
  int node = 0;
  int coin = 0;
};

/// Regular graph with `degree` ports per node. ports[v * degree + a] is the
/// (node, port) pair reached by leaving node v through port a.
class PortGraph {
 public:
  PortGraph(int nodes, int degree, std::vector<PortTarget> ports);
  static PortGraph cycle(int nodes);

  int nodes() const noexcept { return nodes_; }
  int degree() const noexcept { return degree_; }
  const std::vector<PortTarget>& ports() const noexcept { return ports_; }
  /// True when constructed by cycle().
  bool is_cycle() const noexcept { return is_cycle_; }

  /// Permutation matrix of the shift on the d * V dimensional walk space.
  ComplexMatrix shift() const;

 private:
  int nodes_;
  int degree_;
  std::vector<PortTarget> ports_;
  bool is_cycle_ = false;
};

struct WalkSpec {
  PortGraph graph;
  ComplexMatrix coin;           // degree x degree unitary
  double decoherence_p = 0.0;   // coin measurement probability per step

  WalkSpec(PortGraph g, ComplexMatrix c, double p = 0.0);
  Eigen::Index dim() const { return static_cast<Eigen::Index>(graph.degree()) * graph.nodes(); }
};

/// Unit vector over the walk basis.
class WalkState {
 public:
  explicit WalkState(ComplexVector amplitudes);
  static WalkState basis(const WalkSpec& spec, int coin, int node);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

struct PositionDistribution {
  std::vector<double> probabilities;  // one per node

  double l1_distance(const PositionDistribution& other) const;
};

/// U = S (C (x) I_V). Requires decoherence_p == 0.
ComplexMatrix build_walk_unitary(const WalkSpec& spec);

/// {sqrt(1-p) U} together with {sqrt(p) (P_k (x) I_V) U : k}, with P_k the
/// coin basis projectors. Zero-weight operators are omitted.
KrausSet build_walk_channel(const WalkSpec& spec);

PositionDistribution position_distribution(const WalkState& state, int nodes);
PositionDistribution position_distribution(const DensityMatrix& rho, int nodes);

/// Limit of the time-averaged position distribution of a unitary walk from the
/// eigendecomposition of U, keeping only eigenvector pairs with equal
/// eigenvalues (phases clustered at `phase_tol`).
PositionDistribution walk_limit_distribution(const WalkSpec& spec, const WalkState& alpha0,
                                             double phase_tol = 1e-8);

/// (1/t) sum_{n=1..t} P_n. Unitary walks evolve the state vector; decoherent
/// walks evolve the density matrix through the walk channel.
PositionDistribution empirical_time_avg(const WalkSpec& spec, const WalkState& alpha0, int steps);

}  // namespace qmc
