#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abasis/set_expr.hpp"
#include "brute.hpp"

using namespace abasis;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_set_expr(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("terms") {
  CHECK(parse_set_expr("5N+2@12").enumerate(30) == std::vector<Int>{12, 17, 22, 27});
  CHECK(parse_set_expr("5N+2").enumerate(13) == std::vector<Int>{2, 7, 12});
  CHECK(parse_set_expr("6N+7").enumerate(20) == std::vector<Int>{7, 13, 19});
  CHECK(parse_set_expr("[3..6]").enumerate(100) == std::vector<Int>{3, 4, 5, 6});
  CHECK(parse_set_expr("{}").empty());
  CHECK(parse_set_expr("{9,1,9}").exceptional() == std::vector<Int>{1, 9});
}

TEST_CASE("whitespace is ignored") {
  CHECK(parse_set_expr("  6 N + 1 @ 7U{ 2 , 3 }  ") == parse_set_expr("6N+1@7 U {2,3}"));
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("0N") == 0);
  CHECK(error_position("2N U 0N+1") == 5);
  CHECK(error_position("3N+") == 3);
  CHECK(error_position("{1,2") == 4);
  CHECK(error_position("[5..2]") == 1);
  CHECK(error_position("2N U") == 4);
  CHECK(error_position("2N 3N") == 3);
  CHECK(error_position("-1N") == 0);
  CHECK(error_position("99999999999999999999N") == 18);
  CHECK_THROWS_AS(parse_set_expr("[0..10000000]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_set_expr("0N"), doctest::Contains("modulus must be positive"), ParseError);
}

TEST_CASE("expression printing round-trips") {
  const char* texts[] = {"6N U {2,3}", "5N+2@12 U [1..4]", "{}", "3N+1 U 3N+2 U {0}"};
  for (const char* text : texts) {
    const SetExpr e = parse_expr(text);
    CHECK(print(parse_expr(print(e))) == print(e));
    CHECK(evaluate(parse_expr(print(e))) == evaluate(e));
  }
}

TEST_CASE("property: canonical text parses back to the same set") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const EPS s = canonicalize(brute::random_raw(rng, 30));
    CHECK(parse_set_expr(s.to_string()) == s);
    CHECK(parse_set_expr(s.to_string()).to_string() == s.to_string());
  }
}
