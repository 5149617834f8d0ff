#include "abasis/essentials.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

#include "abasis/order.hpp"

namespace abasis {

namespace {

void require_basis(const EPS& s) {
  if (!is_basis(s)) throw NotABasis(fmt::format("{} is not an additive basis", s.to_string()));
}

// gcd of differences of S ∖ {x} for x ∈ F. Removing a single element never
// touches the tail classes, so the witness set minus x is a witness set.
Int gcd_without(const EPS& s, Int x) {
  std::vector<Int> w = s.witnesses();
  w.erase(std::find(w.begin(), w.end(), x));
  if (s.is_finite() && w.size() <= 1) return 0;
  return gcd_of_differences(w, s.is_finite() ? 0 : s.modulus());
}

bool is_exceptional(const EPS& s, Int x) {
  return std::binary_search(s.exceptional().begin(), s.exceptional().end(), x);
}

}  // namespace

EssentialProfile essential_elements(const EPS& s) {
  require_basis(s);
  EssentialProfile out;
  for (Int x : s.exceptional()) {
    const Int d = gcd_without(s, x);
    if (d == 1) continue;
    out.elements.push_back(x);
    out.divisors.push_back(d);
    out.q = checked_mul(out.q, d);
  }
  const EPS rest = remove_finite(s, out.elements);
  out.module = out.elements.empty() ? 1 : gcd_of_differences(rest);
  out.least_non_essential = *rest.min();
  return out;
}

Int divisor_for(const EPS& s, Int x) {
  require_basis(s);
  if (!s.contains(x)) throw PreconditionError(fmt::format("{} is not an element", x));
  // Tail elements are never essential.
  const Int d = is_exceptional(s, x) ? gcd_without(s, x) : 1;
  if (d == 1) throw PreconditionError(fmt::format("{} is not an essential element", x));
  return d;
}

Int module_m(const EPS& s) { return essential_elements(s).module; }

bool is_essential_part(const EPS& s, std::span<const Int> part) {
  if (part.empty()) return false;
  for (Int x : part) {
    if (!s.contains(x)) return false;
  }
  if (is_basis(remove_finite(s, part))) return false;
  std::vector<Int> smaller(part.begin(), part.end());
  for (std::size_t i = 0; i < part.size(); ++i) {
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    const bool still_basis = is_basis(remove_finite(s, smaller));
    smaller.insert(smaller.begin() + static_cast<std::ptrdiff_t>(i), part[i]);
    if (!still_basis) return false;
  }
  return true;
}

PartCoprimality audit_part_coprimality(const EPS& s, std::span<const Int> p1, std::span<const Int> p2) {
  require_basis(s);
  std::vector<Int> a(p1.begin(), p1.end());
  std::vector<Int> b(p2.begin(), p2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) throw PreconditionError("the two parts must be distinct");
  if (!is_essential_part(s, a) || !is_essential_part(s, b)) {
    throw PreconditionError("both parts must be finite essential parts (infinite essentialities are not supported)");
  }
  // Finite parts of an infinite basis never cover it, so P1 ∪ P2 ≠ S holds here.
  PartCoprimality out;
  out.d1 = gcd_of_differences(remove_finite(s, a));
  out.d2 = gcd_of_differences(remove_finite(s, b));
  out.both_at_least_two = out.d1 >= 2 && out.d2 >= 2;
  out.coprime = std::gcd(out.d1, out.d2) == 1;
  return out;
}

}  // namespace abasis
