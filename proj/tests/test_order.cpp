#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abasis/order.hpp"
#include "abasis/set_expr.hpp"
#include "brute.hpp"

using namespace abasis;

namespace {

// Order from an explicit sumset table, bound chosen generously.
std::optional<int> brute_order(const EPS& s, int h_max) {
  const Int top = s.exceptional().empty() ? 0 : s.exceptional().back();
  const Int bound = 2 * (h_max * (s.threshold() + s.modulus() + top) + 4 * s.modulus() + 20);
  return brute::order(s.enumerate(bound), bound, h_max);
}

}  // namespace

TEST_CASE("basicity examples") {
  const BasisDecision n = decide_basis(EPS::naturals());
  CHECK(n.is_basis);
  CHECK(n.certificate->order == 1);

  const BasisDecision evens = decide_basis(parse_set_expr("2N"));
  CHECK_FALSE(evens.is_basis);
  REQUIRE(evens.cycle);
  CHECK(evens.cycle->first_step < evens.cycle->repeat_step);
  CHECK(gcd_of_differences(parse_set_expr("2N")) == 2);

  CHECK_FALSE(is_basis(parse_set_expr("6N U {2,4}")));
  CHECK(gcd_of_differences(parse_set_expr("6N U {2,4}")) == 2);
  CHECK_FALSE(is_basis(EPS::finite({0, 1})));
  CHECK_FALSE(is_basis(EPS::finite({})));
}

TEST_CASE("order examples") {
  const EPS a1 = parse_set_expr("2N U {1}");
  CHECK(order(a1).order == 2);
  CHECK(brute_order(a1, 6) == 2);
  const EPS a3 = parse_set_expr("30N U {15,10,6}");
  CHECK(order(a3).order == 8);
  CHECK(brute_order(a3, 10) == 8);
  const EPS x2 = parse_set_expr("6N U [1..5]");
  CHECK(order(x2).order == 2);
  CHECK(brute_order(x2, 4) == 2);
  CHECK_THROWS_AS(order(parse_set_expr("2N")), NotABasis);
}

TEST_CASE("h_max guard") {
  CHECK_THROWS_AS(order(parse_set_expr("30N U {15,10,6}"), {.h_max = 5}), CapacityError);
  CHECK(order(parse_set_expr("30N U {15,10,6}"), {.h_max = 8}).order == 8);
}

TEST_CASE("at most h summands") {
  // Adding 0 lets shorter sums count.
  const EPS s = parse_set_expr("7N+1 U {3}");
  const EPS with_zero = set_union(s, EPS::finite({0}));
  CHECK(order_at_most(s).order == order(with_zero).order);
  CHECK(order_at_most(s).order <= order(s).order);
}

TEST_CASE("effective_bound examples") {
  CHECK(effective_bound(EPS::naturals(), 1) == 0);
  CHECK(effective_bound(parse_set_expr("2N U {1}"), 2) == 0);
  const EPS a2 = parse_set_expr("6N U {2,3}");
  const Int bound = 10 * 6 * 4;
  const auto table = brute::sumset(a2.enumerate(bound), 4, bound);
  CHECK(effective_bound(a2, 4) == brute::cover_start(table));
  CHECK_THROWS_AS(effective_bound(a2, 3), PreconditionError);
}

TEST_CASE("sumset table examples") {
  CHECK(sumset_membership_table(EPS::naturals(), 2, 5) == std::vector<bool>(6, true));
  CHECK(sumset_membership_table(parse_set_expr("2N"), 2, 5) == std::vector<bool>{true, false, true, false, true, false});
  const auto table = sumset_membership_table(parse_set_expr("6N U {2,3}"), 2, 12);
  std::vector<bool> want(13, false);
  const std::vector<Int> elems = parse_set_expr("6N U {2,3}").enumerate(12);
  for (Int x : elems) {
    for (Int y : elems) {
      if (x + y <= 12) want[static_cast<std::size_t>(x + y)] = true;
    }
  }
  CHECK(table == want);
}

TEST_CASE("property: gcd criterion equals engine basicity") {
  std::mt19937_64 rng(31);
  int bases = 0;
  for (int i = 0; i < 600; ++i) {
    const EPS s = canonicalize(brute::random_raw(rng, 60, false));
    const bool basis = is_basis(s);
    CHECK(basis == (gcd_of_differences(s) == 1));
    bases += basis ? 1 : 0;
  }
  CHECK(bases > 50);
}

TEST_CASE("property: certificates are sound and orders match a dense table") {
  std::mt19937_64 rng(32);
  int checked = 0;
  while (checked < 150) {
    const EPS s = canonicalize(brute::random_raw(rng, 12, false));
    if (!is_basis(s)) continue;
    const OrderCertificate cert = order(s);
    if (cert.order > 12) continue;
    ++checked;
    const Int bound = cert.coverage_threshold + 3 * cert.modulus + 10;
    const auto table = brute::sumset(s.enumerate(bound), cert.order, bound);
    for (std::size_t c = 0; c < cert.least_flagged_sums.size(); ++c) {
      const Int v = cert.least_flagged_sums[c];
      CHECK(floor_mod(v, cert.modulus) == static_cast<Int>(c));
      CHECK(table[static_cast<std::size_t>(v)]);
      CHECK(table[static_cast<std::size_t>(v + cert.modulus)]);
    }
    CHECK(brute::cover_start(table) <= cert.coverage_threshold);
    CHECK(effective_bound(s, cert.order) == brute::cover_start(table));
    CHECK(brute_order(s, cert.order + 1) == cert.order);
    CHECK(sumset_membership_table(s, cert.order, bound) == std::vector<bool>(table.begin(), table.end()));
  }
}

TEST_CASE("property: success is monotone in h when 0 is an element") {
  std::mt19937_64 rng(33);
  int checked = 0;
  while (checked < 100) {
    EPS s = canonicalize(brute::random_raw(rng, 15, false));
    s = set_union(s, EPS::finite({0}));
    if (!is_basis(s)) continue;
    ++checked;
    const int h = order(s).order;
    for (int k = h; k <= h + 3; ++k) {
      const auto sums = least_flagged_sums(s, k);
      CHECK(std::none_of(sums.begin(), sums.end(), [](Int v) { return v < 0; }));
    }
  }
}
