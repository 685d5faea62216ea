#pragma once

// Named channel constructors and seeded random fixtures.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qmc/channel.hpp"

namespace qmc::catalog {

using Parameters = std::map<std::string, double>;

enum class ClaimSource { paper, derived };

struct CategoryClaim {
  int category = 0;
  ClaimSource source = ClaimSource::derived;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  Parameters parameters;  // defaults
  std::function<KrausSet(const Parameters&)> builder;
  std::vector<CategoryClaim> expected_category;
};

const std::vector<CatalogEntry>& entries();

/// Throws DomainError for unknown names.
const CatalogEntry& find(std::string_view name);

/// Builds `name` with its defaults overridden by `overrides`. Unknown
/// parameter names are rejected.
KrausSet build(std::string_view name, const Parameters& overrides = {});

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Two-qubit CNOT on basis |q0 q1> (q0 most significant).
ComplexMatrix cnot(int control);

/// {sqrt(p) I, sqrt(1-p) Z}
KrausSet make_phase_flip(double p);
/// {sqrt(p) I, sqrt(1-p) X}
KrausSet make_bit_flip(double p);
/// {sqrt(p) I, sqrt(1-p) Y}
KrausSet make_bit_phase_flip(double p);
/// {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}
KrausSet make_depolarizing(double p);
/// {sqrt(1/2) I, sqrt(1/2) U} with U the rotation by pi/3.
KrausSet make_random_unitary_example();
/// {sqrt(w_i) U_i}. Weights must be positive and sum to 1 within 1e-12.
KrausSet make_random_unitary_mixture(const std::vector<double>& weights,
                                     const std::vector<ComplexMatrix>& unitaries,
                                     std::string label = "random_unitary_mixture");
/// {sqrt(p) CNOT(control 0), sqrt(1-p) CNOT(control 1)} on two qubits.
KrausSet make_cnot_mixture(double p);

struct Corollary6Result {
  bool applies = false;
  double p = 0.0;
};

/// Splits off the Kraus elements that are multiples of the identity, with
/// total weight 1 - p, and tests whether the rest satisfies
/// sum A A^dagger = p I with 0 < p < 1.
Corollary6Result corollary6_check(const KrausSet& k, double tol = 1e-10);

/// Fixed generator for all randomized fixtures.
using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240517;

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) divided out.
ComplexMatrix random_unitary(int n, Rng& rng);
/// G G^dagger / tr(G G^dagger) for complex Gaussian G.
DensityMatrix random_density(int n, Rng& rng);
/// Mixture of `count` Haar unitaries with uniform-random normalised weights.
KrausSet random_unitary_mixture(int n, int count, Rng& rng);

std::string to_string(ClaimSource s);

}  // namespace qmc::catalog
