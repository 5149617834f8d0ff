#pragma once

#include <span>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/// Essential elements of a basis together with their associated divisors.
struct EssentialProfile {
  std::vector<Int> elements;   // x_1 < ... < x_s
  std::vector<Int> divisors;   // d_i = gcd of differences of S ∖ {x_i}
  Int q = 1;                   // d_1 ⋯ d_s
  Int module = 1;              // gcd of differences of S ∖ Ess(S)
  Int least_non_essential = 0; // x_0

  std::size_t count() const noexcept { return elements.size(); }
};

/// Throws NotABasis.
EssentialProfile essential_elements(const EPS& s);
/// gcd of differences of S ∖ {x}; throws PreconditionError unless x is essential.
Int divisor_for(const EPS& s, Int x);
Int module_m(const EPS& s);

struct PartCoprimality {
  Int d1 = 0;
  Int d2 = 0;
  bool both_at_least_two = false;
  bool coprime = false;

  bool holds() const noexcept { return both_at_least_two && coprime; }
};

/// True iff P is an inclusion-minimal finite part whose removal destroys basicity.
bool is_essential_part(const EPS& s, std::span<const Int> part);

/// Checks that two distinct essential parts have coprime divisors d(P_1), d(P_2).
/// Throws PreconditionError when the inputs are not two distinct essential parts.
PartCoprimality audit_part_coprimality(const EPS& s, std::span<const Int> p1, std::span<const Int> p2);

}  // namespace abasis
