#pragma once

#include <string>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/**
 * Decomposition S = (aB + b) ⊔ E where a (the raison) is the largest integer
 * with S ∼ aX + b, 0 ≤ b < a, B is the dessentialised set and the reservoir E
 * collects the finitely many elements with x ≢ b (mod a).
 */
struct ProgressionProfile {
  Int raison = 1;
  Int offset = 0;
  EPS dessentialized;
  std::vector<Int> reservoir;
  int radical_length = 0;  // ω(a)
  int total_length = 0;    // Ω(a)
  bool is_basis = true;
  std::string warning;     // set when the input is not a basis
};

/// Exact on any infinite set; non-bases are reported with `is_basis = false`.
/// Throws NotABasis for finite sets, which have no tail to decompose.
ProgressionProfile raison_profile(const EPS& s);
/// gcd of the tail differences of an infinite set (its raison), without the basis check.
Int raison_of(const EPS& s);

bool has_essential_subset(const EPS& s);

/// All essential parts of a basis, ordered by the prime p | a that produces them.
std::vector<std::vector<Int>> essential_subsets(const EPS& s);

struct PartCount {
  Int raison = 1;
  int radical_length = 0;
  std::size_t count = 0;
  bool all_in_reservoir = true;
  bool count_within_bound = true;

  bool holds() const noexcept { return all_in_reservoir && count_within_bound; }
};

PartCount audit_part_count(const EPS& s);

/// The three equivalent properties for a decomposition S ∼ a'B' + b'.
struct DecompositionAudit {
  bool same_raison = false;           // a = a'
  bool translate_equivalent = false;  // B ∼ B' + k for some k
  bool basis_without_parts = false;   // B' is a basis without essential part

  bool consistent() const noexcept {
    return same_raison == translate_equivalent && translate_equivalent == basis_without_parts;
  }
};

/// Throws PreconditionError unless S ∼ a'B' + b'.
DecompositionAudit audit_decomposition(const EPS& s, Int a2, Int b2, const EPS& b_set);

}  // namespace abasis
