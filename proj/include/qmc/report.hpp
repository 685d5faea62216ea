#pragma once

// Machine-readable analysis reports shared by the CLI and the tests. Every
// number is rounded to 12 significant digits (magnitudes below 1e-13 print as
// 0) and every list has a fixed order, so equal inputs give byte-identical
// output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmc/io.hpp"
#include "qmc/limits.hpp"

namespace qmc::report {

using json = nlohmann::json;

double round_sig(double x);
json number(double x);
json complex(cplx z);
json matrix(const ComplexMatrix& m);

json validation(const KrausSet& k, double tol = kDefaultValidationTol);
json spectrum(const KrausSet& k, const SpectralOptions& opts = {});
json classification(const KrausSet& k, const SpectralOptions& opts = {});

struct CheckOutcome {
  json report;
  bool passed = false;
};

/// Runs the norm, spectral-radius, unit-eigenvalue, Jordan-chain,
/// orthogonality, commutant and conjecture diagnostics on one channel.
CheckOutcome check_channel(const KrausSet& k, const SpectralOptions& opts = {});

/// Runs check_channel over a list of channels. `seed` is recorded when the
/// list contains seeded random fixtures.
CheckOutcome check_suite(const std::vector<KrausSet>& channels, const SpectralOptions& opts = {},
                         std::optional<std::uint64_t> seed = std::nullopt);

/// CSV with header "t,distance".
std::string trajectory_csv(const Trajectory& traj);

/// Two-space indented JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace qmc::report
