#include "abasis/dessentializer.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "abasis/essentials.hpp"
#include "abasis/order.hpp"
#include "abasis/primes.hpp"
#include "abasis/progression.hpp"

namespace abasis {

namespace {

// Both iterations terminate; the cap only guards against a broken invariant.
constexpr int kMaxIterations = 256;

EPS contract_rest(const EPS& rest, Int anchor, Int module) {
  return affine_contract(translate(rest, -anchor), module, 0);
}

EPS primitive_from(const EPS& s, const EssentialProfile& profile) {
  return contract_rest(remove_finite(s, profile.elements), profile.least_non_essential, profile.module);
}

BoundCheck check_le(std::string relation, long double lhs, long double rhs, long double tolerance = 0) {
  return {std::move(relation), lhs, rhs, lhs <= rhs + tolerance};
}

}  // namespace

EPS primitive_set(const EPS& s) { return primitive_from(s, essential_elements(s)); }

EPS elementary_set(const EPS& s) {
  const EssentialProfile profile = essential_elements(s);
  const Int m = profile.module;
  return canonicalize({m, {profile.least_non_essential % m}, profile.least_non_essential, profile.elements});
}

DessentializationTrace dessentialize_elementary(const EPS& s) {
  DessentializationTrace trace;
  EPS current = s;
  for (int i = 0;; ++i) {
    const EssentialProfile profile = essential_elements(current);
    trace.steps.push_back({profile.module, profile.least_non_essential, profile.count(), raison_of(current), current});
    if (profile.count() == 0) {
      trace.delta = i;
      return trace;
    }
    if (i == kMaxIterations) throw Error("internal: elementary dessentialization did not stabilise");
    current = primitive_from(current, profile);
  }
}

DessentializationTrace dessentialize_general(const EPS& s) {
  const ProgressionProfile profile = raison_profile(s);
  if (!profile.is_basis) throw NotABasis(fmt::format("{} is not an additive basis", s.to_string()));

  DessentializationTrace trace;
  EPS current = s;
  for (int i = 0;; ++i) {
    const auto parts = essential_subsets(current);
    const Int raison = raison_of(current);
    if (parts.empty()) {
      trace.steps.push_back({1, *current.min(), 0, raison, current});
      trace.delta = i;
      break;
    }
    if (i == kMaxIterations) throw Error("internal: general dessentialization did not stabilise");
    std::vector<Int> removed;
    for (const auto& part : parts) removed.insert(removed.end(), part.begin(), part.end());
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    const EPS rest = remove_finite(current, removed);
    const Int module = gcd_of_differences(rest);
    const Int anchor = *rest.min();
    trace.steps.push_back({module, anchor, parts.size(), raison, current});
    current = contract_rest(rest, anchor, module);
  }

  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    if (trace.steps[i].raison >= trace.steps[i - 1].raison) {
      throw Error("internal: raison did not decrease along the general dessentialization");
    }
  }
  if (raison_of(trace.final_set()) != 1) {
    throw Error("internal: general dessentialization ended with raison above 1");
  }
  if (trace.delta > profile.total_length) {
    throw Error("internal: general dessentialization took more steps than the length of the raison");
  }
  if (!is_equivalent_up_to_translation(trace.final_set(), profile.dessentialized)) {
    throw Error("internal: general dessentialization disagrees with the dessentialised set");
  }
  return trace;
}

DeltaBound delta_bound(const EPS& s) {
  DeltaBound out;
  out.order = order(s).order;
  out.effective_bound = std::max<Int>(1, effective_bound(s, out.order));
  const double n = static_cast<double>(out.effective_bound);
  out.value = std::max(std::log(n) / std::log(2.0) + 1.0, std::pow(n, 1.0 / out.order) - 2.0);
  out.delta = dessentialize_elementary(s).delta;
  out.holds = out.delta <= out.value + 1e-9;
  return out;
}

EPS construct_prescribed(const std::vector<int>& counts, Int modulus_cap) {
  if (counts.empty()) throw PreconditionError("at least one count is required");
  for (int c : counts) {
    if (c < 1) throw PreconditionError("counts must be positive");
  }
  const std::size_t n = counts.size() - 1;
  std::vector<EPS> stages{EPS::naturals()};
  for (std::size_t i = 0; i <= n; ++i) {
    const int s = counts[n - i];
    Int q = 1;
    for (int j = 1; j <= s; ++j) q = checked_mul(q, nth_prime(static_cast<std::size_t>(j)));
    if (checked_mul(q, stages.back().modulus()) > modulus_cap) {
      throw CapacityError(fmt::format("modulus exceeds cap {}", modulus_cap));
    }
    std::vector<Int> cofactors;
    for (int j = 1; j <= s; ++j) cofactors.push_back(q / nth_prime(static_cast<std::size_t>(j)));
    stages.push_back(set_union(affine_image(stages.back(), q, 0), EPS::finite(std::move(cofactors))));
  }

  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (primitive_set(stages[i]) != stages[i - 1]) {
      throw Error(fmt::format("internal: P(A_{}) differs from A_{}", i, i - 1));
    }
  }
  const DessentializationTrace trace = dessentialize_elementary(stages.back());
  bool matches = trace.steps.size() == counts.size() + 1 && trace.steps.back().essentials == 0;
  for (std::size_t i = 0; matches && i < counts.size(); ++i) {
    matches = trace.steps[i].essentials == static_cast<std::size_t>(counts[i]);
  }
  if (!matches) throw Error("internal: dessentialization trace does not reproduce the prescribed counts");
  return stages.back();
}

bool BoundReport::holds() const {
  return vacuous || std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

BoundReport audit_order_sandwich(const EPS& s) {
  const int ord_a = order(s).order;
  const int ord_d = order(elementary_set(s)).order;
  const int ord_p = order(primitive_set(s)).order;
  BoundReport out;
  out.name = "order sandwich";
  out.quantities = {{"ord(D(A))", ord_d}, {"ord(A)", ord_a}, {"ord(P(A))", ord_p}};
  out.checks.push_back(check_le("ord(D(A)) <= ord(A)", ord_d, ord_a));
  out.checks.push_back(check_le("ord(A) <= ord(P(A)) + ord(D(A)) - 1", ord_a, ord_p + ord_d - 1));
  out.equality = ord_d == ord_a && ord_a == ord_p + ord_d - 1;
  return out;
}

BoundReport audit_divisor_sandwich(const EPS& s) {
  const EssentialProfile profile = essential_elements(s);
  BoundReport out;
  out.name = "divisor sandwich";
  const auto count = static_cast<Int>(profile.count());
  const Int sum_d = std::accumulate(profile.divisors.begin(), profile.divisors.end(), Int{0});
  out.quantities = {{"s", count}, {"sum d_i", sum_d}, {"q(A)", profile.q}, {"m(A)", profile.module}};
  if (count == 0) {
    out.vacuous = true;
    return out;
  }
  const int ord_d = order(elementary_set(s)).order;
  out.quantities.emplace_back("ord(D(A))", ord_d);
  const Int lower = sum_d - count + 1;
  long double upper = 0;
  if (profile.q == profile.module) {
    upper = static_cast<long double>(lower);
    out.equality = true;
  } else {
    const long double ratio = static_cast<long double>(profile.module) / static_cast<long double>(profile.q);
    upper = ratio * (static_cast<long double>(sum_d) - count * std::pow(1.0L / ratio, 1.0L / count)) + 1.0L;
  }
  out.checks.push_back(check_le("sum d_i - s + 1 <= ord(D(A))", lower, ord_d));
  out.checks.push_back(check_le("ord(D(A)) <= (m/q)(sum d_i - s (q/m)^(1/s)) + 1", ord_d, upper, 1e-9L));
  return out;
}

BoundReport audit_prime_sum_bound(const EPS& s) {
  const int h = order(s).order;
  const auto count = static_cast<Int>(essential_elements(s).count());
  Int prime_sum = 0;
  for (Int i = 1; i <= count; ++i) prime_sum += nth_prime(static_cast<std::size_t>(i));
  BoundReport out;
  out.name = "prime-sum bound";
  out.quantities = {{"ord(A)", h}, {"s", count}, {"p_1 + ... + p_s", prime_sum}};
  out.checks.push_back(check_le("p_1 + ... + p_s - s + 1 <= ord(A)", prime_sum - count + 1, h));
  out.equality = prime_sum - count + 1 == h;
  return out;
}

}  // namespace abasis
