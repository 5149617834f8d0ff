#include "abasis/progression.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

#include "abasis/essentials.hpp"
#include "abasis/order.hpp"

namespace abasis {

Int raison_of(const EPS& s) {
  if (s.is_finite()) throw NotABasis(fmt::format("{} is finite and has no raison", s.to_string()));
  // gcd of the differences of the tail: the modulus together with residue gaps.
  const auto& residues = s.residues();
  Int a = s.modulus();
  for (Int r : residues) a = std::gcd(a, r - residues.front());
  return a;
}

ProgressionProfile raison_profile(const EPS& s) {
  ProgressionProfile out;
  const Int a = raison_of(s);
  out.raison = a;
  out.offset = s.residues().front() % a;
  for (Int f : s.exceptional()) {
    if (f % a != out.offset) out.reservoir.push_back(f);
  }
  out.dessentialized = affine_contract(remove_finite(s, out.reservoir), a, out.offset);
  out.radical_length = radical_length(a);
  out.total_length = total_length(a);
  out.is_basis = is_basis(s);
  if (!out.is_basis) out.warning = "input is not an additive basis; decomposition reported for reference only";
  return out;
}

bool has_essential_subset(const EPS& s) {
  if (!is_basis(s)) throw NotABasis(fmt::format("{} is not an additive basis", s.to_string()));
  return raison_profile(s).raison >= 2;
}

std::vector<std::vector<Int>> essential_subsets(const EPS& s) {
  if (!is_basis(s)) throw NotABasis(fmt::format("{} is not an additive basis", s.to_string()));
  const ProgressionProfile profile = raison_profile(s);

  // Any essential part P has a prime p | gcd(S ∖ P) | a, hence contains every
  // element off the class b mod p; minimality forces equality with that set.
  std::vector<std::vector<Int>> candidates;
  for (Int p : prime_divisors(profile.raison)) {
    std::vector<Int> part;
    for (Int x : profile.reservoir) {
      if (x % p != profile.offset % p) part.push_back(x);
    }
    if (!part.empty() && std::find(candidates.begin(), candidates.end(), part) == candidates.end()) {
      candidates.push_back(std::move(part));
    }
  }

  std::vector<std::vector<Int>> out;
  for (const auto& part : candidates) {
    const bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const auto& other) {
      return other.size() < part.size() && std::includes(part.begin(), part.end(), other.begin(), other.end());
    });
    if (has_smaller) continue;
    if (!is_essential_part(s, part)) {
      throw Error(fmt::format("internal: candidate part of {} failed verification", s.to_string()));
    }
    out.push_back(part);
  }
  return out;
}

PartCount audit_part_count(const EPS& s) {
  const ProgressionProfile profile = raison_profile(s);
  const auto parts = essential_subsets(s);
  PartCount out;
  out.raison = profile.raison;
  out.radical_length = profile.radical_length;
  out.count = parts.size();
  for (const auto& part : parts) {
    if (!std::includes(profile.reservoir.begin(), profile.reservoir.end(), part.begin(), part.end())) {
      out.all_in_reservoir = false;
    }
  }
  out.count_within_bound = out.count <= static_cast<std::size_t>(out.radical_length);
  return out;
}

DecompositionAudit audit_decomposition(const EPS& s, Int a2, Int b2, const EPS& b_set) {
  if (!is_equivalent_cofinite(s, affine_image(b_set, a2, b2))) {
    throw PreconditionError(fmt::format("{} is not equivalent to {}*({})+{}", s.to_string(), a2, b_set.to_string(), b2));
  }
  const ProgressionProfile profile = raison_profile(s);
  DecompositionAudit out;
  out.same_raison = profile.raison == a2;
  out.translate_equivalent = is_equivalent_up_to_translation(profile.dessentialized, b_set);
  out.basis_without_parts = !b_set.is_finite() && is_basis(b_set) && raison_profile(b_set).raison == 1;
  return out;
}

}  // namespace abasis
