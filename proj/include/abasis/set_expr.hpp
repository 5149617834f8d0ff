#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/*
 * Set-expression grammar (ASCII, whitespace-insensitive):
 *
 *   set    := term ( "U" term )*
 *   term   := ap | finite | range
 *   ap     := INT "N" ( "+" INT )? ( "@" INT )?    aN+b@t = {x >= t : x = b mod a}, t defaults to b
 *   finite := "{" INT ( "," INT )* "}"              "{}" denotes the empty set
 *   range  := "[" INT ".." INT "]"
 */

struct ApTerm {
  Int step = 1;
  Int offset = 0;
  std::optional<Int> start;
};

struct FiniteTerm {
  std::vector<Int> elements;
};

struct RangeTerm {
  Int lo = 0;
  Int hi = 0;
};

using SetTerm = std::variant<ApTerm, FiniteTerm, RangeTerm>;

struct SetExpr {
  std::vector<SetTerm> terms;
};

/// Largest integer range a RangeTerm may expand to.
inline constexpr Int kMaxRangeLength = 10'000'000;

SetExpr parse_expr(std::string_view text);
EPS evaluate(const SetExpr& expr);
std::string print(const SetExpr& expr);

/// Parses `text` and returns the canonical set it denotes.
EPS parse_set_expr(std::string_view text);

}  // namespace abasis
