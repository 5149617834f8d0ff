#pragma once

#include <string>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/// Primitive set P(S) = {(x - x_0) / m(S) : x ∈ S ∖ Ess(S)}.
EPS primitive_set(const EPS& s);
/// Elementary set D(S) = (m(S)ℕ + x_0) ∪ Ess(S).
EPS elementary_set(const EPS& s);

struct DessentializationStep {
  Int module = 1;       // m_i
  Int anchor = 0;       // x_{0,i}
  std::size_t essentials = 0;  // s_i: essential elements (elementary) or essential parts (general)
  Int raison = 1;       // raison of the current set
  EPS set;              // P^i(S)
};

struct DessentializationTrace {
  std::vector<DessentializationStep> steps;  // steps.back() has no essential element / part
  int delta = 0;

  const EPS& final_set() const { return steps.back().set; }
};

/// Iterates P until no essential element remains.
DessentializationTrace dessentialize_elementary(const EPS& s);
/// Iterates the generalised P that removes the union of all essential parts.
DessentializationTrace dessentialize_general(const EPS& s);

struct DeltaBound {
  int order = 0;
  Int effective_bound = 0;  // N, clamped below by 1
  double value = 0;         // max(log N / log 2 + 1, N^{1/h} - 2)
  int delta = 0;
  bool holds = false;
};

/// Evaluated faithfully, so `holds` can be false: 4N U {1,2} has order 3 and
/// N = 1, giving a bound of 1 against two elementary steps.
DeltaBound delta_bound(const EPS& s);

/// Largest modulus accepted by the family constructors.
inline constexpr Int kDefaultModulusCap = 10'000'000;

/// Builds a basis whose elementary dessentialization has essential-element counts s_0, ..., s_n, then 0.
/// The result is post-verified; throws CapacityError when the modulus exceeds `modulus_cap`.
EPS construct_prescribed(const std::vector<int>& counts, Int modulus_cap = kDefaultModulusCap);

struct BoundCheck {
  std::string relation;
  long double lhs = 0;
  long double rhs = 0;
  bool holds = false;
};

/// Named quantities and inequality verdicts of one bound audit.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, Int>> quantities;
  std::vector<BoundCheck> checks;
  bool equality = false;  // the two sides of a sandwich coincide
  bool vacuous = false;   // hypotheses not met; nothing to check

  bool holds() const;
};

/// ord D(S) ≤ ord S ≤ ord P(S) + ord D(S) - 1.
BoundReport audit_order_sandwich(const EPS& s);
/// Σ d_i - s + 1 ≤ ord D(S) ≤ (m/q)(Σ d_i - s (q/m)^{1/s}) + 1, for s ≥ 1.
BoundReport audit_divisor_sandwich(const EPS& s);
/// ord S ≥ p_1 + ... + p_s - s + 1.
BoundReport audit_prime_sum_bound(const EPS& s);

}  // namespace abasis
