#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "abasis/eps.hpp"

// Brute-force cross-checks. Nothing here reuses the order engine's sumset code;
// the only engine call is the basicity test inside naive_essential_subsets.
namespace abasis::oracle {

enum class Verdict { Order, NotABasis, Inconclusive };

struct NaiveOrder {
  Verdict verdict = Verdict::Inconclusive;
  int order = 0;  // meaningful only for Verdict::Order
};

/// `elements` must be S ∩ [0, bound] in ascending order. Returns the least h ≤ h_max
/// whose exact h-fold sumset covers the top `window` integers of [0, bound].
/// The table is exact below `bound`, so the answer is the true order whenever
/// the window lies in the periodic range of every hS with h ≤ h_max (see safe_bound).
NaiveOrder naive_order(std::span<const Int> elements, Int bound, int h_max, Int window);

/// A bound large enough for naive_order(enumerate(S, bound), bound, h_max, window) to be exact.
Int safe_bound(const EPS& s, int h_max, Int window);

/// Exhaustive search over subsets of the exceptional part; throws CapacityError above `cap` candidates.
std::vector<std::vector<Int>> naive_essential_subsets(const EPS& s, std::size_t cap = 16);

/// Estimates from a finite ascending sample; no maximality certificate.
struct EmpiricalProfile {
  Int gcd = 0;     // gcd of all differences
  Int raison = 1;  // gcd of differences among elements ≥ bound / 2
  Int offset = 0;
  std::vector<Int> reservoir;  // elements off the progression raison·ℕ + offset
  std::string label = "EMPIRICAL";
};

/// Throws PreconditionError for fewer than two elements or unsorted input.
EmpiricalProfile empirical_profile(std::span<const Int> values, Int bound);

/// Random eventually periodic basis: modulus ≤ 40, at most 8 exceptional elements,
/// order ≤ 20, tails biased toward a common divisor ≥ 2 so that essential
/// elements and parts actually occur.
EPS random_basis(std::mt19937_64& rng);

struct InstanceReport {
  std::string set;
  std::vector<std::string> property_failures;  // structural properties
  std::vector<std::string> disagreements;      // engine vs oracle
  bool order_conclusive = false;
  bool subsets_compared = false;
};

/// Runs every structural property and both oracle comparisons on one basis.
InstanceReport check_instance(const EPS& s);

struct BatchReport {
  std::uint64_t seed = 0;
  int iterations = 0;
  int property_failures = 0;
  int disagreements = 0;
  int order_comparisons = 0;
  int subset_comparisons = 0;
  std::vector<InstanceReport> failing;  // instances with any failure

  bool holds() const noexcept { return property_failures == 0 && disagreements == 0; }
};

BatchReport check_random(std::uint64_t seed, int iterations);

}  // namespace abasis::oracle
