#include "qmc/catalog.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/QR>

#include "qmc/errors.hpp"

namespace qmc::catalog {

namespace {

void require_open_unit(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(who) + ": p = " + std::to_string(p) + " must lie in (0, 1)");
  }
}

KrausSet two_element_mixture(double p, const ComplexMatrix& other, std::string label) {
  return KrausSet({std::sqrt(p) * linalg::identity(2), std::sqrt(1.0 - p) * other},
                  std::move(label));
}

double param(const Parameters& ps, const char* key) {
  const auto it = ps.find(key);
  if (it == ps.end()) throw DomainError(std::string("missing catalog parameter '") + key + "'");
  return it->second;
}

ComplexMatrix complex_gaussian(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"phase_flip",
                 {{"p", 0.75}},
                 [](const Parameters& ps) { return make_phase_flip(param(ps, "p")); },
                 {{2, ClaimSource::paper, "listed under category 2"}}});
  out.push_back({"bit_flip",
                 {{"p", 0.75}},
                 [](const Parameters& ps) { return make_bit_flip(param(ps, "p")); },
                 {{2, ClaimSource::paper, "listed under category 2"}}});
  out.push_back({"bit_phase_flip",
                 {{"p", 0.75}},
                 [](const Parameters& ps) { return make_bit_phase_flip(param(ps, "p")); },
                 {{1, ClaimSource::paper, "asserted to belong to category 1"},
                  {2, ClaimSource::derived, "commutant of {I, Y} is span{I, Y}, so g(1) = 2"}}});
  out.push_back({"depolarizing",
                 {{"p", 0.5}},
                 [](const Parameters& ps) { return make_depolarizing(param(ps, "p")); },
                 {{1, ClaimSource::derived, "commutant of the Paulis is the scalars, so g(1) = 1"}}});
  out.push_back({"random_unitary_example",
                 {},
                 [](const Parameters&) { return make_random_unitary_example(); },
                 {{1, ClaimSource::paper, "fixed space asserted to be {kI}"},
                  {2, ClaimSource::derived,
                   "U has two distinct eigenvalues; its spectral projectors span a 2-dim commutant"}}});
  out.push_back({"cnot_mixture",
                 {{"p", 0.5}},
                 [](const Parameters& ps) { return make_cnot_mixture(param(ps, "p")); },
                 {}});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

const CatalogEntry& find(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.name;
  throw DomainError("unknown catalog channel '" + std::string(name) + "' (known: " + known + ")");
}

KrausSet build(std::string_view name, const Parameters& overrides) {
  const CatalogEntry& e = find(name);
  Parameters ps = e.parameters;
  for (const auto& [key, value] : overrides) {
    if (!ps.contains(key)) {
      throw DomainError("catalog channel '" + e.name + "' has no parameter '" + key + "'");
    }
    ps[key] = value;
  }
  return e.builder(ps);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::sqrt(2.0);
}

ComplexMatrix cnot(int control) {
  if (control != 0 && control != 1) throw DomainError("cnot: control qubit must be 0 or 1");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int b = 0; b < 4; ++b) {
    const int q0 = b >> 1, q1 = b & 1;
    const int out = control == 0 ? (q0 << 1) | (q1 ^ q0) : ((q0 ^ q1) << 1) | q1;
    m(out, b) = 1.0;
  }
  return m;
}

KrausSet make_phase_flip(double p) {
  require_open_unit(p, "make_phase_flip");
  return two_element_mixture(p, pauli_z(), "phase_flip");
}

KrausSet make_bit_flip(double p) {
  require_open_unit(p, "make_bit_flip");
  return two_element_mixture(p, pauli_x(), "bit_flip");
}

KrausSet make_bit_phase_flip(double p) {
  require_open_unit(p, "make_bit_phase_flip");
  return two_element_mixture(p, pauli_y(), "bit_phase_flip");
}

KrausSet make_depolarizing(double p) {
  require_open_unit(p, "make_depolarizing");
  const double w = std::sqrt(p / 3.0);
  return KrausSet({std::sqrt(1.0 - p) * linalg::identity(2), w * pauli_x(), w * pauli_y(),
                   w * pauli_z()},
                  "depolarizing");
}

KrausSet make_random_unitary_example() {
  ComplexMatrix u(2, 2);
  const double s = std::sqrt(3.0) / 2.0;
  u << 0.5, -s, s, 0.5;
  const double w = std::sqrt(0.5);
  return KrausSet({w * linalg::identity(2), w * u}, "random_unitary_example");
}

KrausSet make_random_unitary_mixture(const std::vector<double>& weights,
                                     const std::vector<ComplexMatrix>& unitaries,
                                     std::string label) {
  if (weights.empty() || weights.size() != unitaries.size()) {
    throw DomainError("make_random_unitary_mixture: need one positive weight per unitary");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("make_random_unitary_mixture: weights must be positive");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("make_random_unitary_mixture: weights sum to " + std::to_string(total));
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& u = unitaries[i];
    if (u.rows() != u.cols()) throw DimensionError("make_random_unitary_mixture: non-square matrix");
    const double err = (u.adjoint() * u - linalg::identity(u.rows())).norm();
    if (err > 1e-10) {
      throw DomainError("make_random_unitary_mixture: matrix " + std::to_string(i) +
                        " is not unitary (residual " + std::to_string(err) + ")");
    }
    ops.push_back(std::sqrt(weights[i]) * u);
  }
  return KrausSet(std::move(ops), std::move(label));
}

KrausSet make_cnot_mixture(double p) {
  require_open_unit(p, "make_cnot_mixture");
  return KrausSet({std::sqrt(p) * cnot(0), std::sqrt(1.0 - p) * cnot(1)}, "cnot_mixture");
}

Corollary6Result corollary6_check(const KrausSet& k, double tol) {
  const Eigen::Index n = k.dim();
  const ComplexMatrix id = linalg::identity(n);
  double identity_weight = 0.0;
  bool found = false;
  ComplexMatrix rest = ComplexMatrix::Zero(n, n);
  for (const auto& a : k.operators()) {
    const cplx c = a.trace() / static_cast<double>(n);
    if (std::abs(c) > tol && (a - c * id).norm() <= tol) {
      identity_weight += std::norm(c);
      found = true;
    } else {
      rest += a * a.adjoint();
    }
  }
  Corollary6Result r;
  if (!found) return r;
  r.p = 1.0 - identity_weight;
  r.applies = r.p > 0.0 && r.p < 1.0 && (rest - r.p * id).norm() <= tol;
  return r;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  if (n < 1) throw DomainError("random_unitary: dimension must be positive");
  const ComplexMatrix g = complex_gaussian(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

DensityMatrix random_density(int n, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // exact Hermitian symmetry
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

KrausSet random_unitary_mixture(int n, int count, Rng& rng) {
  if (count < 1) throw DomainError("random_unitary_mixture: need at least one unitary");
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  std::vector<double> weights;
  std::vector<ComplexMatrix> unitaries;
  for (int i = 0; i < count; ++i) {
    weights.push_back(uniform(rng));
    unitaries.push_back(random_unitary(n, rng));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
  return make_random_unitary_mixture(weights, unitaries,
                                     "random_unitary_mixture_n" + std::to_string(n));
}

std::string to_string(ClaimSource s) { return s == ClaimSource::paper ? "paper" : "derived"; }

}  // namespace qmc::catalog
