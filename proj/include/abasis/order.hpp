#pragma once

#include <optional>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/**
 * Witness that hS covers every integer from some point on.
 *
 * least_flagged_sums[c] is the least h-fold sum congruent to c (mod modulus)
 * that uses at least one tail summand. Every larger integer of that residue is
 * then also an h-fold sum (the tail summand absorbs multiples of the modulus),
 * so hS ⊇ [coverage_threshold, ∞) with coverage_threshold = max_c v_c.
 */
struct OrderCertificate {
  int order = 0;
  Int modulus = 1;
  std::vector<Int> least_flagged_sums;
  Int coverage_threshold = 0;
};

/// Negative answer: the reachable state sets at two steps coincide and no step before the repeat covered all residues.
struct CycleProof {
  int first_step = 0;
  int repeat_step = 0;
};

struct BasisDecision {
  bool is_basis = false;
  std::optional<OrderCertificate> certificate;
  std::optional<CycleProof> cycle;
};

struct OrderOptions {
  /// Abort with CapacityError when no decision is reached within this many summands.
  std::optional<int> h_max;
};

/// Decides whether hS ∼ ℕ for some h and returns the matching certificate.
BasisDecision decide_basis(const EPS& s, const OrderOptions& options = {});
bool is_basis(const EPS& s);

/// Least h with hS ∼ ℕ (sums of exactly h elements). Throws NotABasis.
OrderCertificate order(const EPS& s, const OrderOptions& options = {});
/// Order with "at most h summands" semantics, i.e. the order of S ∪ {0}.
OrderCertificate order_at_most(const EPS& s, const OrderOptions& options = {});

/// Flagged minima for exactly h summands; entries are -1 for residues with no flagged h-sum.
std::vector<Int> least_flagged_sums(const EPS& s, int h);

/// Least N such that every n ≥ N is a sum of exactly h elements of S.
/// Throws PreconditionError when hS is not cofinite.
Int effective_bound(const EPS& s, int h);

/// entry n is true iff n ∈ hS, for n in [0, bound].
std::vector<bool> sumset_membership_table(const EPS& s, int h, Int bound);

}  // namespace abasis
