// qmc: command-line front end for channel analysis.
//
// Exit codes: 0 success, 1 malformed input, 2 mathematical precondition
// violated (non-bistochastic channel, peripheral obstruction, failed
// validation), 3 numerical failure or failed diagnostics.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmc/catalog.hpp"
#include "qmc/errors.hpp"
#include "qmc/io.hpp"
#include "qmc/limits.hpp"
#include "qmc/report.hpp"
#include "qmc/walks.hpp"

namespace {

using qmc::io::json;
namespace report = qmc::report;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMath = 2;
constexpr int kExitNumeric = 3;

qmc::SpectralOptions options_from_env(std::optional<double> peripheral_tol) {
  qmc::SpectralOptions opts;
  if (const char* env = std::getenv("QMC_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw qmc::ParseError(std::string("QMC_TOL must be a positive number, got '") + env + "'");
    }
    opts.rank_tol = tol;
  }
  if (peripheral_tol) opts.peripheral_tol = *peripheral_tol;
  return opts;
}

qmc::KrausSet load_channel(const std::string& path) {
  return qmc::io::channel_from_json(qmc::io::read_json(path));
}

qmc::DensityMatrix load_state(const std::string& path) {
  return qmc::io::state_from_json(qmc::io::read_json(path));
}

qmc::catalog::Parameters parse_params(const std::vector<std::string>& items) {
  qmc::catalog::Parameters ps;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw qmc::ParseError("--param expects name=value, got '" + item + "'");
    }
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') throw qmc::ParseError("--param value is not a number: '" + value + "'");
    ps[item.substr(0, eq)] = x;
  }
  return ps;
}

struct Args {
  std::string channel;
  std::vector<std::string> channels;
  std::string state;
  std::string reference;
  std::string csv;
  std::string walk;
  std::string out;
  std::string name;
  std::vector<std::string> params;
  std::optional<double> tol;
  int steps = 0;
  int empirical = 0;
  bool limit = false;
  bool catalog_all = false;
  int random_count = 0;
  int random_dim = 0;
  std::uint64_t seed = qmc::catalog::kDefaultSeed;
};

int run_validate(const Args& a) {
  const auto k = load_channel(a.channel);
  const json r = report::validation(k);
  std::cout << report::dump(r);
  return r["bistochastic"].get<bool>() ? kExitOk : kExitMath;
}

int run_spectrum(const Args& a) {
  const auto k = load_channel(a.channel);
  std::cout << report::dump(report::spectrum(k, options_from_env(a.tol)));
  return kExitOk;
}

int run_classify(const Args& a) {
  const auto k = load_channel(a.channel);
  std::cout << report::dump(report::classification(k, options_from_env(std::nullopt)));
  return kExitOk;
}

int run_limit(const Args& a) {
  const auto k = load_channel(a.channel);
  const auto rho0 = load_state(a.state);
  try {
    const auto lim = qmc::strict_limit(k, rho0, options_from_env(std::nullopt));
    std::cout << report::dump(json{{"channel", k.label()}, {"limit", "strict"}, {"rho", report::matrix(lim.matrix())}});
    return kExitOk;
  } catch (const qmc::PeripheralObstruction& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: run 'qmc cesaro " << a.channel << " --state " << a.state
              << "' for the time-averaged limit\n";
    return kExitMath;
  }
}

int run_cesaro(const Args& a) {
  const auto k = load_channel(a.channel);
  const auto rho0 = load_state(a.state);
  const auto lim = qmc::cesaro_limit(k, rho0, options_from_env(std::nullopt));
  json r{{"channel", k.label()}, {"limit", "cesaro"}, {"rho", report::matrix(lim.matrix())}};
  if (a.empirical > 0) {
    const auto avg = qmc::empirical_cesaro(k, rho0, a.empirical);
    r["empirical"] = json{{"steps", a.empirical},
                          {"rho", report::matrix(avg.matrix())},
                          {"distance", report::number((avg.matrix() - lim.matrix()).norm())}};
  }
  std::cout << report::dump(r);
  return kExitOk;
}

int run_evolve(const Args& a) {
  const auto k = load_channel(a.channel);
  const auto rho0 = load_state(a.state);
  qmc::EvolveOptions opts;
  opts.reference = a.reference.empty() ? qmc::cesaro_limit(k, rho0, options_from_env(std::nullopt))
                                       : load_state(a.reference);
  const auto traj = qmc::evolve(k, rho0, a.steps, opts);
  const std::string csv = report::trajectory_csv(traj);
  if (a.csv.empty()) {
    std::cout << csv;
  } else {
    qmc::io::write_text(a.csv, csv);
    std::cout << report::dump(json{{"channel", k.label()},
                                   {"steps", traj.states.size()},
                                   {"csv", a.csv},
                                   {"final_distance", report::number(traj.distances_to_limit.back())}});
  }
  return kExitOk;
}

int run_walk(const Args& a) {
  const auto wf = qmc::io::walk_from_json(qmc::io::read_json(a.walk));
  const int nodes = wf.spec.graph.nodes();
  const auto emp = qmc::empirical_time_avg(wf.spec, wf.initial, a.steps);
  json r{{"nodes", nodes},
         {"degree", wf.spec.graph.degree()},
         {"decoherence_p", report::number(wf.spec.decoherence_p)},
         {"steps", a.steps}};
  auto as_json = [](const qmc::PositionDistribution& d) {
    json out = json::array();
    for (double x : d.probabilities) out.push_back(report::number(x));
    return out;
  };
  r["empirical"] = as_json(emp);
  if (a.limit) {
    qmc::PositionDistribution lim;
    if (wf.spec.decoherence_p == 0.0) {
      lim = qmc::walk_limit_distribution(wf.spec, wf.initial);
      r["limit_method"] = "eigenvector pairs with equal eigenvalues";
    } else {
      const auto channel = qmc::build_walk_channel(wf.spec);
      const auto rho0 = qmc::DensityMatrix::pure(wf.initial.amplitudes());
      lim = qmc::position_distribution(qmc::cesaro_limit(channel, rho0, options_from_env(std::nullopt)), nodes);
      r["limit_method"] = "projection onto the fixed space of the walk channel";
    }
    r["limit"] = as_json(lim);
    r["l1_gap"] = report::number(lim.l1_distance(emp));
  }
  std::cout << report::dump(r);
  return kExitOk;
}

int run_catalog(const Args& a) {
  const auto k = qmc::catalog::build(a.name, parse_params(a.params));
  const std::string text = qmc::io::channel_to_json(k).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    qmc::io::write_text(a.out, text);
  }
  return kExitOk;
}

int run_check(const Args& a) {
  std::vector<qmc::KrausSet> channels;
  for (const auto& path : a.channels) channels.push_back(load_channel(path));
  if (a.catalog_all) {
    for (const auto& e : qmc::catalog::entries()) channels.push_back(qmc::catalog::build(e.name));
  }
  std::optional<std::uint64_t> seed;
  if (a.random_count > 0) {
    seed = a.seed;
    qmc::catalog::Rng rng(a.seed);
    for (int i = 0; i < a.random_count; ++i) {
      const int n = a.random_dim > 0 ? a.random_dim : 2 + i % 2;
      channels.push_back(qmc::catalog::random_unitary_mixture(n, 2 + i % 3, rng));
    }
  }
  if (channels.empty()) throw qmc::ParseError("check: give channel files, --catalog or --random");
  for (const auto& k : channels) qmc::require_bistochastic(k, "check");
  const auto outcome = report::check_suite(channels, options_from_env(std::nullopt), seed);
  std::cout << report::dump(outcome.report);
  return outcome.passed ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting behaviour of quantum Markov chains generated by bistochastic channels"};
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "Check trace preservation and unitality");
  validate->add_option("channel", a.channel, "Channel JSON file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, peripheral set and fixed space");
  spectrum->add_option("channel", a.channel, "Channel JSON file")->required();
  spectrum->add_option("--tol", a.tol, "Peripheral tolerance (|lambda| >= 1 - tol)");

  auto* classify = app.add_subcommand("classify", "Limiting-behaviour category 1-4");
  classify->add_option("channel", a.channel, "Channel JSON file")->required();

  auto* limit = app.add_subcommand("limit", "Strict limit of Phi^t rho(0)");
  limit->add_option("channel", a.channel, "Channel JSON file")->required();
  limit->add_option("--state", a.state, "Initial density matrix JSON")->required();

  auto* cesaro = app.add_subcommand("cesaro", "Cesaro (time-averaged) limit");
  cesaro->add_option("channel", a.channel, "Channel JSON file")->required();
  cesaro->add_option("--state", a.state, "Initial density matrix JSON")->required();
  cesaro->add_option("--empirical", a.empirical, "Compare with the running average over T steps")
      ->check(CLI::PositiveNumber);

  auto* evolve = app.add_subcommand("evolve", "Trajectory distances as CSV (t,distance)");
  evolve->add_option("channel", a.channel, "Channel JSON file")->required();
  evolve->add_option("--state", a.state, "Initial density matrix JSON")->required();
  evolve->add_option("--steps", a.steps, "Number of steps")->required()->check(CLI::PositiveNumber);
  evolve->add_option("--reference", a.reference, "Reference state (default: Cesaro limit)");
  evolve->add_option("--csv", a.csv, "Write the CSV here instead of stdout");

  auto* walk = app.add_subcommand("walk", "Time-averaged position distribution of a coined walk");
  walk->add_option("walk", a.walk, "Walk JSON file")->required();
  walk->add_option("--steps", a.steps, "Number of steps")->required()->check(CLI::PositiveNumber);
  walk->add_flag("--limit", a.limit, "Also compute the limiting distribution and the L1 gap");

  auto* catalog = app.add_subcommand("catalog", "Emit a built-in channel as JSON");
  catalog->add_option("name", a.name, "Catalog channel name")->required();
  catalog->add_option("--param", a.params, "Parameter override name=value");
  catalog->add_option("--out", a.out, "Output file (default: stdout)");

  auto* check = app.add_subcommand("check", "Run the full spectral diagnostic suite");
  check->add_option("channels", a.channels, "Channel JSON files");
  check->add_flag("--catalog", a.catalog_all, "Include every catalog channel at default parameters");
  check->add_option("--random", a.random_count, "Add this many seeded random unitary mixtures");
  check->add_option("--random-dim", a.random_dim, "Dimension of random mixtures (default: 2 and 3 alternating)");
  check->add_option("--seed", a.seed, "Seed for mt19937_64");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return run_validate(a);
    if (*spectrum) return run_spectrum(a);
    if (*classify) return run_classify(a);
    if (*limit) return run_limit(a);
    if (*cesaro) return run_cesaro(a);
    if (*evolve) return run_evolve(a);
    if (*walk) return run_walk(a);
    if (*catalog) return run_catalog(a);
    if (*check) return run_check(a);
  } catch (const qmc::NotBistochastic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const qmc::PeripheralObstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const qmc::NumericalFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const qmc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
