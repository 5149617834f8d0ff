#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abasis/arith.hpp"

namespace abasis {

/// Unvalidated description of F ∪ {x ≥ threshold : x mod modulus ∈ residues}.
struct RawSet {
  Int modulus = 1;
  std::vector<Int> residues;
  Int threshold = 0;
  std::vector<Int> exceptional;
};

/**
 * An eventually periodic subset of the non-negative integers, always held in
 * canonical form:
 *
 *   S = F ∪ {x ≥ t : x mod m ∈ R}
 *
 * where m is the minimal period of the tail, t is the least tail element
 * (the smallest admissible threshold rounded up to a tail residue) and F holds
 * every element outside the tail. A finite set has m = 1, R = ∅, t = 0.
 * Two values are equal as sets iff they compare equal.
 */
class EventuallyPeriodicSet {
public:
  /// The empty set.
  EventuallyPeriodicSet() = default;

  static EventuallyPeriodicSet naturals();
  static EventuallyPeriodicSet finite(std::vector<Int> elements);
  /// {x ≥ start : x ≡ offset mod step}.
  static EventuallyPeriodicSet progression(Int step, Int offset, Int start);

  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& residues() const noexcept { return residues_; }
  Int threshold() const noexcept { return threshold_; }
  const std::vector<Int>& exceptional() const noexcept { return exceptional_; }

  bool is_finite() const noexcept { return residues_.empty(); }
  bool empty() const noexcept { return residues_.empty() && exceptional_.empty(); }
  std::optional<Int> min() const;

  bool contains(Int n) const;
  /// Elements in [0, bound], ascending.
  std::vector<Int> enumerate(Int bound) const;
  /// Least tail element congruent to `residue` (which must belong to R).
  Int tail_start(Int residue) const;
  /// F together with the least tail element of each residue class, ascending.
  std::vector<Int> witnesses() const;

  RawSet raw() const { return {modulus_, residues_, threshold_, exceptional_}; }
  /// Canonical text in the set-expression language.
  std::string to_string() const;

  bool operator==(const EventuallyPeriodicSet&) const = default;

  friend EventuallyPeriodicSet canonicalize(RawSet raw);

private:
  Int modulus_ = 1;
  std::vector<Int> residues_;
  Int threshold_ = 0;
  std::vector<Int> exceptional_;
};

using EPS = EventuallyPeriodicSet;

/// Canonical form of the set described by `raw`. Idempotent.
EPS canonicalize(RawSet raw);

EPS set_union(const EPS& a, const EPS& b);
/// {x + k : x ∈ S}; requires min(S) + k ≥ 0.
EPS translate(const EPS& s, Int k);
/// {(x - b) / a : x ∈ S}; every element must satisfy x ≡ b (mod a) and x ≥ b.
EPS affine_contract(const EPS& s, Int a, Int b);
/// aS + b = {a x + b : x ∈ S}.
EPS affine_image(const EPS& s, Int a, Int b);
/// S ∖ P for a finite P ⊆ S.
EPS remove_finite(const EPS& s, std::span<const Int> removed);

/// gcd{x - y : x, y ∈ S}; 0 when S has at most one element.
Int gcd_of_differences(const EPS& s);
/// Same quantity for a finite list of values plus an optional period (0 for none).
Int gcd_of_differences(std::span<const Int> values, Int period);

/// True iff the symmetric difference of the two sets is finite.
bool is_equivalent_cofinite(const EPS& a, const EPS& b);
/// True iff a ∼ b + k for some integer k.
bool is_equivalent_up_to_translation(const EPS& a, const EPS& b);

}  // namespace abasis
