#include "qmc/walks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

namespace {

constexpr double kUnitaryTol = 1e-10;

void require_unitary(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(what) + " must be square");
  const double err = (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
  if (err > kUnitaryTol) {
    throw DomainError(std::string(what) + " is not unitary (||U^dagger U - I|| = " +
                      std::to_string(err) + ")");
  }
}

// Coin-major walk basis index of |a, v>.
Eigen::Index walk_index(int coin, int node, int nodes) {
  return static_cast<Eigen::Index>(coin) * nodes + node;
}

ComplexMatrix coined_unitary(const WalkSpec& spec) {
  const int nodes = spec.graph.nodes();
  return spec.graph.shift() * linalg::kron(spec.coin, linalg::identity(nodes));
}

std::vector<double> accumulate_positions(const ComplexVector& psi, int nodes, int degree) {
  std::vector<double> p(static_cast<std::size_t>(nodes), 0.0);
  for (int a = 0; a < degree; ++a) {
    for (int v = 0; v < nodes; ++v) p[static_cast<std::size_t>(v)] += std::norm(psi(walk_index(a, v, nodes)));
  }
  return p;
}

}  // namespace

PortGraph::PortGraph(int nodes, int degree, std::vector<PortTarget> ports)
    : nodes_(nodes), degree_(degree), ports_(std::move(ports)) {
  if (nodes < 1 || degree < 1) throw DomainError("PortGraph: nodes and degree must be positive");
  const auto expected = static_cast<std::size_t>(nodes) * static_cast<std::size_t>(degree);
  if (ports_.size() != expected) {
    throw DomainError("PortGraph: expected " + std::to_string(expected) + " port entries, got " +
                      std::to_string(ports_.size()));
  }
  std::vector<bool> hit(expected, false);
  for (std::size_t i = 0; i < ports_.size(); ++i) {
    const auto& t = ports_[i];
    if (t.node < 0 || t.node >= nodes || t.coin < 0 || t.coin >= degree) {
      throw DomainError("PortGraph: port entry " + std::to_string(i) + " points outside the graph");
    }
    const auto target = static_cast<std::size_t>(t.node) * static_cast<std::size_t>(degree) +
                        static_cast<std::size_t>(t.coin);
    if (hit[target]) {
      throw DomainError("PortGraph: (node " + std::to_string(t.node) + ", port " +
                        std::to_string(t.coin) + ") is entered twice; the shift is not a bijection");
    }
    hit[target] = true;
  }
}

PortGraph PortGraph::cycle(int nodes) {
  if (nodes < 1) throw DomainError("cycle: node count must be positive");
  std::vector<PortTarget> ports;
  ports.reserve(static_cast<std::size_t>(2 * nodes));
  for (int v = 0; v < nodes; ++v) {
    ports.push_back({(v + 1) % nodes, 1});
    ports.push_back({(v + nodes - 1) % nodes, 0});
  }
  PortGraph g(nodes, 2, std::move(ports));
  g.is_cycle_ = true;
  return g;
}

ComplexMatrix PortGraph::shift() const {
  const Eigen::Index dim = static_cast<Eigen::Index>(nodes_) * degree_;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (int v = 0; v < nodes_; ++v) {
    for (int a = 0; a < degree_; ++a) {
      const auto& t = ports_[static_cast<std::size_t>(v * degree_ + a)];
      s(walk_index(t.coin, t.node, nodes_), walk_index(a, v, nodes_)) = 1.0;
    }
  }
  return s;
}

WalkSpec::WalkSpec(PortGraph g, ComplexMatrix c, double p)
    : graph(std::move(g)), coin(std::move(c)), decoherence_p(p) {
  if (coin.rows() != graph.degree() || coin.cols() != graph.degree()) {
    throw DimensionError("WalkSpec: coin must be " + std::to_string(graph.degree()) + "x" +
                         std::to_string(graph.degree()));
  }
  require_unitary(coin, "WalkSpec: coin");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("WalkSpec: decoherence_p must lie in [0, 1]");
}

WalkState::WalkState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InvalidState("WalkState: empty amplitude vector");
  const double n = amplitudes_.norm();
  if (std::abs(n - 1.0) > 1e-10) {
    throw InvalidState("WalkState: amplitudes must have unit norm, got " + std::to_string(n));
  }
}

WalkState WalkState::basis(const WalkSpec& spec, int coin, int node) {
  const int nodes = spec.graph.nodes();
  if (coin < 0 || coin >= spec.graph.degree() || node < 0 || node >= nodes) {
    throw DomainError("WalkState::basis: (coin " + std::to_string(coin) + ", node " +
                      std::to_string(node) + ") is outside the walk space");
  }
  ComplexVector psi = ComplexVector::Zero(spec.dim());
  psi(walk_index(coin, node, nodes)) = 1.0;
  return WalkState(std::move(psi));
}

double PositionDistribution::l1_distance(const PositionDistribution& other) const {
  if (other.probabilities.size() != probabilities.size()) {
    throw DimensionError("l1_distance: distributions over different node counts");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    d += std::abs(probabilities[i] - other.probabilities[i]);
  }
  return d;
}

ComplexMatrix build_walk_unitary(const WalkSpec& spec) {
  if (spec.decoherence_p != 0.0) {
    throw DomainError("build_walk_unitary: the walk is decoherent (p = " +
                      std::to_string(spec.decoherence_p) + "); use build_walk_channel");
  }
  return coined_unitary(spec);
}

KrausSet build_walk_channel(const WalkSpec& spec) {
  const ComplexMatrix u = coined_unitary(spec);
  const double p = spec.decoherence_p;
  const int nodes = spec.graph.nodes();
  std::vector<ComplexMatrix> ops;
  if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * u);
  if (p > 0.0) {
    for (int k = 0; k < spec.graph.degree(); ++k) {
      ComplexMatrix proj = ComplexMatrix::Zero(spec.graph.degree(), spec.graph.degree());
      proj(k, k) = 1.0;
      ops.push_back(std::sqrt(p) * linalg::kron(proj, linalg::identity(nodes)) * u);
    }
  }
  std::string label = spec.graph.is_cycle() ? "walk_cycle_" + std::to_string(nodes)
                                            : "walk_graph_" + std::to_string(nodes);
  return KrausSet(std::move(ops), std::move(label));
}

PositionDistribution position_distribution(const WalkState& state, int nodes) {
  const auto dim = state.amplitudes().size();
  if (nodes < 1 || dim % nodes != 0) {
    throw DimensionError("position_distribution: state of dimension " + std::to_string(dim) +
                         " does not factor over " + std::to_string(nodes) + " nodes");
  }
  return {accumulate_positions(state.amplitudes(), nodes, static_cast<int>(dim / nodes))};
}

PositionDistribution position_distribution(const DensityMatrix& rho, int nodes) {
  const auto dim = rho.dim();
  if (nodes < 1 || dim % nodes != 0) {
    throw DimensionError("position_distribution: state of dimension " + std::to_string(dim) +
                         " does not factor over " + std::to_string(nodes) + " nodes");
  }
  const int degree = static_cast<int>(dim / nodes);
  PositionDistribution out{std::vector<double>(static_cast<std::size_t>(nodes), 0.0)};
  for (int a = 0; a < degree; ++a) {
    for (int v = 0; v < nodes; ++v) {
      const auto i = walk_index(a, v, nodes);
      out.probabilities[static_cast<std::size_t>(v)] += rho.matrix()(i, i).real();
    }
  }
  return out;
}

PositionDistribution walk_limit_distribution(const WalkSpec& spec, const WalkState& alpha0,
                                             double phase_tol) {
  const ComplexMatrix u = build_walk_unitary(spec);
  if (alpha0.amplitudes().size() != u.rows()) {
    throw DimensionError("walk_limit_distribution: initial state has wrong dimension");
  }
  // U is normal, so its Schur vectors are orthonormal eigenvectors.
  const auto schur = linalg::eig(u);
  const ComplexMatrix& psi = schur.schur_basis;
  const double off_diagonal =
      (schur.triangular - ComplexMatrix(schur.triangular.diagonal().asDiagonal())).norm();
  if (off_diagonal > 1e-10) {
    throw NumericalFailure("walk_limit_distribution: Schur form of U is not diagonal",
                           off_diagonal);
  }
  const auto cluster = linalg::cluster_values(schur.eigenvalues, phase_tol);
  const int clusters = *std::max_element(cluster.begin(), cluster.end()) + 1;

  const ComplexVector coeff = psi.adjoint() * alpha0.amplitudes();  // a_j = <psi_j|alpha0>
  std::vector<ComplexVector> component(static_cast<std::size_t>(clusters),
                                       ComplexVector::Zero(u.rows()));
  for (Eigen::Index j = 0; j < u.rows(); ++j) {
    component[static_cast<std::size_t>(cluster[static_cast<std::size_t>(j)])] += coeff(j) * psi.col(j);
  }
  // sum over i, j in one cluster of a_i a_j^* <a,v|psi_i><psi_j|a,v> is
  // |<a,v| sum_{j in cluster} a_j psi_j>|^2 summed over clusters.
  const int nodes = spec.graph.nodes();
  PositionDistribution out{std::vector<double>(static_cast<std::size_t>(nodes), 0.0)};
  for (const auto& c : component) {
    const auto p = accumulate_positions(c, nodes, spec.graph.degree());
    for (int v = 0; v < nodes; ++v) out.probabilities[static_cast<std::size_t>(v)] += p[static_cast<std::size_t>(v)];
  }
  return out;
}

PositionDistribution empirical_time_avg(const WalkSpec& spec, const WalkState& alpha0, int steps) {
  if (steps < 1) throw DomainError("empirical_time_avg: step count must be at least 1");
  if (alpha0.amplitudes().size() != spec.dim()) {
    throw DimensionError("empirical_time_avg: initial state has wrong dimension");
  }
  const int nodes = spec.graph.nodes();
  const int degree = spec.graph.degree();
  std::vector<double> sum(static_cast<std::size_t>(nodes), 0.0);
  auto add = [&](const std::vector<double>& p) {
    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += p[v];
  };

  if (spec.decoherence_p == 0.0) {
    const ComplexMatrix u = build_walk_unitary(spec);
    ComplexVector psi = alpha0.amplitudes();
    for (int t = 1; t <= steps; ++t) {
      psi = u * psi;
      add(accumulate_positions(psi, nodes, degree));
    }
  } else {
    const KrausSet channel = build_walk_channel(spec);
    ComplexMatrix rho = alpha0.amplitudes() * alpha0.amplitudes().adjoint();
    std::vector<double> p(static_cast<std::size_t>(nodes));
    for (int t = 1; t <= steps; ++t) {
      rho = qmc::apply(channel, rho);
      std::fill(p.begin(), p.end(), 0.0);
      for (int a = 0; a < degree; ++a) {
        for (int v = 0; v < nodes; ++v) {
          const auto i = walk_index(a, v, nodes);
          p[static_cast<std::size_t>(v)] += rho(i, i).real();
        }
      }
      add(p);
    }
  }
  for (auto& s : sum) s /= static_cast<double>(steps);
  return {std::move(sum)};
}

}  // namespace qmc
