#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abasis/essentials.hpp"
#include "abasis/oracle.hpp"
#include "abasis/order.hpp"
#include "abasis/primes.hpp"
#include "abasis/progression.hpp"
#include "abasis/set_expr.hpp"
#include "brute.hpp"

using namespace abasis;

TEST_CASE("raison profile examples") {
  const ProgressionProfile n = raison_profile(EPS::naturals());
  CHECK(n.raison == 1);
  CHECK(n.reservoir.empty());
  CHECK(n.dessentialized == EPS::naturals());

  const EPS x2 = parse_set_expr("6N U [1..5]");
  const ProgressionProfile p = raison_profile(x2);
  CHECK(p.raison == 6);
  CHECK(p.offset == 0);
  CHECK(p.dessentialized == EPS::naturals());
  CHECK(p.reservoir == std::vector<Int>{1, 2, 3, 4, 5});
  CHECK(p.radical_length == 2);
  CHECK(p.total_length == 2);

  const ProgressionProfile a1 = raison_profile(parse_set_expr("2N U {1}"));
  CHECK(a1.raison == 2);
  CHECK(a1.offset == 0);
  CHECK(a1.dessentialized == EPS::naturals());
  CHECK(a1.reservoir == std::vector<Int>{1});
}

TEST_CASE("non-bases and finite sets") {
  const ProgressionProfile p = raison_profile(parse_set_expr("2N"));
  CHECK_FALSE(p.is_basis);
  CHECK_FALSE(p.warning.empty());
  CHECK(p.raison == 2);
  CHECK_THROWS_AS(raison_profile(EPS::finite({1, 2})), NotABasis);
  CHECK_THROWS_AS(essential_subsets(parse_set_expr("2N")), NotABasis);
}

TEST_CASE("has_essential_subset examples") {
  CHECK_FALSE(has_essential_subset(EPS::naturals()));
  CHECK(has_essential_subset(parse_set_expr("6N U [1..5]")));
  const EPS s = parse_set_expr("3N U {1,2}");
  CHECK(has_essential_subset(s));
  CHECK(raison_profile(s).raison == 3);
}

TEST_CASE("essential subset examples") {
  const EPS x2 = parse_set_expr("6N U [1..5]");
  CHECK(essential_subsets(x2) == std::vector<std::vector<Int>>{{1, 3, 5}, {1, 2, 4, 5}});
  CHECK(oracle::naive_essential_subsets(x2) == std::vector<std::vector<Int>>{{1, 2, 4, 5}, {1, 3, 5}});
  CHECK(essential_subsets(EPS::naturals()).empty());
  CHECK(essential_subsets(parse_set_expr("6N U {2,3}")) == std::vector<std::vector<Int>>{{3}, {2}});
}

TEST_CASE("part count audit") {
  const PartCount x3 = audit_part_count(family_Xn(3, 1000));
  CHECK(x3.raison == 30);
  CHECK(x3.count == 3);
  CHECK(x3.radical_length == 3);
  CHECK(x3.holds());
  const PartCount x2 = audit_part_count(family_Xn(2, 1000));
  CHECK(x2.count == 2);
  CHECK(x2.radical_length == 2);
  const PartCount n = audit_part_count(EPS::naturals());
  CHECK(n.count == 0);
  CHECK(n.radical_length == 0);
  CHECK(n.holds());
}

TEST_CASE("decomposition audit") {
  const EPS x2 = parse_set_expr("6N U [1..5]");
  const DecompositionAudit good = audit_decomposition(x2, 6, 0, EPS::naturals());
  CHECK(good.same_raison);
  CHECK(good.translate_equivalent);
  CHECK(good.basis_without_parts);
  CHECK(good.consistent());

  // X_2 ∼ 3·(2N U {1}): coarser decomposition, every property fails together.
  const DecompositionAudit coarse = audit_decomposition(x2, 3, 0, parse_set_expr("2N U {1}"));
  CHECK_FALSE(coarse.same_raison);
  CHECK_FALSE(coarse.translate_equivalent);
  CHECK_FALSE(coarse.basis_without_parts);
  CHECK(coarse.consistent());

  const DecompositionAudit n = audit_decomposition(EPS::naturals(), 1, 0, EPS::naturals());
  CHECK((n.same_raison && n.translate_equivalent && n.basis_without_parts));

  CHECK_THROWS_AS(audit_decomposition(x2, 4, 0, EPS::naturals()), PreconditionError);
}

TEST_CASE("property: decomposition round trip, maximality, parts") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const EPS s = oracle::random_basis(rng);
    const ProgressionProfile p = raison_profile(s);
    CHECK(set_union(affine_image(p.dessentialized, p.raison, p.offset), EPS::finite(p.reservoir)) == s);
    for (Int x : p.reservoir) CHECK(x % p.raison != p.offset);
    CHECK((0 <= p.offset && p.offset < p.raison));

    // a is the gcd of differences of the tail.
    const Int top = s.threshold() + 3 * s.modulus();
    std::vector<Int> tail;
    for (Int x : s.enumerate(top)) {
      if (x >= s.threshold() && !std::binary_search(s.exceptional().begin(), s.exceptional().end(), x)) tail.push_back(x);
    }
    CHECK(brute::pair_gcd(tail) == p.raison);
    CHECK(raison_of(p.dessentialized) == 1);
    CHECK(is_basis(p.dessentialized));

    const auto parts = essential_subsets(s);
    for (const auto& part : parts) {
      CHECK_FALSE(is_basis(remove_finite(s, part)));
      for (std::size_t k = 0; k < part.size(); ++k) {
        std::vector<Int> smaller = part;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(is_basis(remove_finite(s, smaller)));
      }
    }
    std::vector<Int> singletons;
    for (const auto& part : parts) {
      if (part.size() == 1) singletons.push_back(part[0]);
    }
    std::sort(singletons.begin(), singletons.end());
    CHECK(singletons == essential_elements(s).elements);

    auto sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == oracle::naive_essential_subsets(s));
  }
}
