#include "qmc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qmc/catalog.hpp"
#include "qmc/errors.hpp"

namespace qmc::report {

namespace {

json cluster_list(const std::vector<EigenCluster>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(json{{"value", complex(c.value)}, {"multiplicity", c.multiplicity}});
  return out;
}

json check_entry(const std::string& name, double value, double bound, bool passed) {
  return json{{"name", name}, {"value", number(value)}, {"bound", number(bound)}, {"passed", passed}};
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-13) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json number(double x) { return round_sig(x); }

json complex(cplx z) { return json::array({round_sig(z.real()), round_sig(z.imag())}); }

json matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json validation(const KrausSet& k, double tol) {
  const ValidationReport r = kraus_validate(k, tol);
  return json{{"channel", k.label()},
              {"dim", k.dim()},
              {"kraus_count", k.size()},
              {"tolerance", number(tol)},
              {"trace_preserving", r.trace_preserving},
              {"trace_preserving_residual", number(r.tp_residual)},
              {"unital", r.unital},
              {"unital_residual", number(r.unital_residual)},
              {"bistochastic", r.bistochastic}};
}

json spectrum(const KrausSet& k, const SpectralOptions& opts) {
  const SpectralData sd = qmc::spectrum(k, opts);
  json values = json::array();
  for (const auto& v : sd.eigenvalues) values.push_back(complex(v));
  json basis = json::array();
  for (const auto& z : sd.fixed_space_basis) basis.push_back(matrix(z));
  return json{{"channel", k.label()},
              {"dim", k.dim()},
              {"eigenvalues", std::move(values)},
              {"peripheral", cluster_list(sd.peripheral)},
              {"interior", cluster_list(sd.interior)},
              {"g1", sd.g1},
              {"fixed_space_basis", std::move(basis)},
              {"schur_residual", number(sd.schur_residual)}};
}

json classification(const KrausSet& k, const SpectralOptions& opts) {
  const ChannelClass c = classify(k, opts);
  json claims = json::array();
  std::vector<std::string> conflicts;
  for (const auto& e : catalog::entries()) {
    if (e.name != k.label()) continue;
    for (const auto& claim : e.expected_category) {
      const bool agrees = claim.category == c.category;
      claims.push_back(json{{"category", claim.category},
                            {"source", catalog::to_string(claim.source)},
                            {"note", claim.note},
                            {"agrees", agrees}});
      if (!agrees) {
        conflicts.push_back(catalog::to_string(claim.source) + " claim says category " +
                            std::to_string(claim.category) + ", computed category " +
                            std::to_string(c.category));
      }
    }
  }
  json peripheral = cluster_list(c.evidence.peripheral);
  json out{{"channel", k.label()},
           {"category", c.category},
           {"peripheral_count", c.peripheral_count},
           {"peripheral", std::move(peripheral)},
           {"g1", c.g1},
           {"claims", std::move(claims)}};
  out["conflict"] = conflicts.empty() ? json(nullptr) : json(conflicts);
  return out;
}

CheckOutcome check_channel(const KrausSet& k, const SpectralOptions& opts) {
  CheckOutcome outcome;
  json checks = json::array();
  bool all = true;
  auto add = [&](json entry) {
    all = all && entry["passed"].get<bool>();
    checks.push_back(std::move(entry));
  };

  const ValidationReport v = kraus_validate(k);
  add(check_entry("bistochastic", std::max(v.tp_residual, v.unital_residual),
                  kDefaultValidationTol, v.bistochastic));
  if (!v.bistochastic) {
    outcome.report = json{{"channel", k.label()}, {"passed", false}, {"checks", std::move(checks)}};
    return outcome;
  }

  const SpectralData sd = qmc::spectrum(k, opts);
  const double norm = operator_norm(k);
  add(check_entry("operator_norm_is_one", std::abs(norm - 1.0), 1e-9, std::abs(norm - 1.0) <= 1e-9));
  double radius = 0.0, to_one = INFINITY;
  for (const auto& l : sd.eigenvalues) {
    radius = std::max(radius, std::abs(l));
    to_one = std::min(to_one, std::abs(l - 1.0));
  }
  add(check_entry("spectral_radius_at_most_one", radius - 1.0, 1e-9, radius <= 1.0 + 1e-9));
  add(check_entry("one_is_eigenvalue", to_one, 1e-9, to_one <= 1e-9));

  json jordan = json::array();
  bool jordan_ok = true;
  for (const auto& c : sd.peripheral) {
    const JordanDiagnostic d = jordan_diagnostic(k, c.value, 1e-8, opts);
    const bool ok = d.g == d.g2 && d.m == d.g;
    jordan_ok = jordan_ok && ok;
    jordan.push_back(json{{"lambda", complex(d.lambda)}, {"m", d.m}, {"g", d.g}, {"g2", d.g2}, {"passed", ok}});
  }
  add(json{{"name", "peripheral_no_jordan_chains"}, {"passed", jordan_ok}, {"details", std::move(jordan)}});

  const OrthogonalityReport orth = orthogonality_check(k, 1e-8, 1e-8, opts);
  json overlaps = json::array();
  for (const auto& e : orth.entries) {
    overlaps.push_back(json{{"lambda", complex(e.lambda)},
                            {"peripheral", e.peripheral},
                            {"subspace_dim", e.subspace_dim},
                            {"max_overlap", number(e.max_overlap)}});
  }
  json orth_entry = check_entry("fixed_space_orthogonal_to_other_eigenspaces", orth.max_overlap, 1e-8, orth.passed);
  orth_entry["details"] = std::move(overlaps);
  add(std::move(orth_entry));

  const auto commutant = fixed_space_commutant(k, opts.rank_tol);
  const double dist = linalg::subspace_distance(std::span<const ComplexMatrix>(commutant),
                                                std::span<const ComplexMatrix>(sd.fixed_space_basis));
  add(check_entry("commutant_matches_fixed_space", dist, 1e-8, dist <= 1e-8));

  const ConjectureResult at_one = conjecture_eigenspace(k, 1.0, opts);
  add(check_entry("conjecture_at_one", at_one.distance, 1e-8, at_one.agrees_with_numerical));

  const auto c6 = catalog::corollary6_check(k);
  if (c6.applies) {
    const bool ok = sd.peripheral_is_unit_only();
    add(json{{"name", "identity_component_forces_unit_peripheral"},
             {"p", number(c6.p)},
             {"peripheral_count", sd.peripheral.size()},
             {"passed", ok}});
  }

  json conjecture = json::array();
  for (const auto& c : sd.peripheral) {
    if (std::abs(c.value - 1.0) <= opts.cluster_tol) continue;
    const ConjectureResult r = conjecture_eigenspace(k, c.value, opts);
    conjecture.push_back(json{{"lambda", complex(c.value)},
                              {"dimension", r.basis.size()},
                              {"eigenspace_dimension", r.numerical_basis.size()},
                              {"distance", number(r.distance)},
                              {"agrees", r.agrees_with_numerical},
                              {"conjugate_distance", number(r.conjugate_distance)}});
  }

  outcome.passed = all;
  outcome.report = json{{"channel", k.label()},
                        {"dim", k.dim()},
                        {"passed", all},
                        {"checks", std::move(checks)},
                        {"conjecture_other_peripheral", std::move(conjecture)}};
  return outcome;
}

CheckOutcome check_suite(const std::vector<KrausSet>& channels, const SpectralOptions& opts,
                         std::optional<std::uint64_t> seed) {
  CheckOutcome suite;
  suite.passed = true;
  json results = json::array();
  for (const auto& k : channels) {
    CheckOutcome one = check_channel(k, opts);
    suite.passed = suite.passed && one.passed;
    results.push_back(std::move(one.report));
  }
  suite.report = json{{"passed", suite.passed},
                      {"channel_count", channels.size()},
                      {"rank_tolerance", number(opts.rank_tol)},
                      {"results", std::move(results)}};
  if (seed) {
    suite.report["rng"] = json{{"generator", "mt19937_64"}, {"seed", *seed}};
  }
  return suite;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,distance\n";
  char buf[32];
  for (std::size_t i = 0; i < traj.distances_to_limit.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", round_sig(traj.distances_to_limit[i]));
    out << (i + 1) << ',' << buf << '\n';
  }
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qmc::report
