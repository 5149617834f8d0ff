#include "abasis/set_expr.hpp"

#include <cctype>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace abasis {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse() {
    SetExpr expr;
    expr.terms.push_back(term());
    while (peek() == 'U') {
      ++pos_;
      expr.terms.push_back(term());
    }
    if (peek() != '\0') fail(fmt::format("unexpected '{}'", text_[pos_]));
    return expr;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(fmt::format("expected '{}'", c));
    ++pos_;
  }

  Int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Int digit = text_[pos_] - '0';
      if (value > (INT64_MAX - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  SetTerm term() {
    const char c = peek();
    if (c == '{') return finite();
    if (c == '[') return range();
    return ap();
  }

  ApTerm ap() {
    const std::size_t at = pos_;
    ApTerm out;
    out.step = integer();
    if (out.step == 0) throw ParseError("modulus must be positive", at);
    expect('N');
    if (peek() == '+') {
      ++pos_;
      out.offset = integer();
    }
    if (peek() == '@') {
      ++pos_;
      out.start = integer();
    }
    return out;
  }

  FiniteTerm finite() {
    FiniteTerm out;
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    out.elements.push_back(integer());
    while (peek() == ',') {
      ++pos_;
      out.elements.push_back(integer());
    }
    expect('}');
    return out;
  }

  RangeTerm range() {
    RangeTerm out;
    expect('[');
    const std::size_t at = pos_;
    out.lo = integer();
    expect('.');
    expect('.');
    out.hi = integer();
    expect(']');
    if (out.lo > out.hi) throw ParseError("empty range", at);
    if (out.hi - out.lo >= kMaxRangeLength) throw ParseError("range too long", at);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

EPS term_set(const SetTerm& term) {
  if (const auto* ap = std::get_if<ApTerm>(&term)) {
    return EPS::progression(ap->step, ap->offset, ap->start.value_or(ap->offset));
  }
  if (const auto* fin = std::get_if<FiniteTerm>(&term)) return EPS::finite(fin->elements);
  const auto& range = std::get<RangeTerm>(term);
  std::vector<Int> elements;
  for (Int x = range.lo; x <= range.hi; ++x) elements.push_back(x);
  return EPS::finite(std::move(elements));
}

std::string term_text(const SetTerm& term) {
  if (const auto* ap = std::get_if<ApTerm>(&term)) {
    std::string out = fmt::format("{}N", ap->step);
    if (ap->offset != 0) out += fmt::format("+{}", ap->offset);
    if (ap->start && *ap->start != ap->offset) out += fmt::format("@{}", *ap->start);
    return out;
  }
  if (const auto* fin = std::get_if<FiniteTerm>(&term)) return fmt::format("{{{}}}", fmt::join(fin->elements, ","));
  const auto& range = std::get<RangeTerm>(term);
  return fmt::format("[{}..{}]", range.lo, range.hi);
}

}  // namespace

SetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

EPS evaluate(const SetExpr& expr) {
  EPS out;
  for (const SetTerm& term : expr.terms) out = set_union(out, term_set(term));
  return out;
}

std::string print(const SetExpr& expr) {
  std::vector<std::string> parts;
  for (const SetTerm& term : expr.terms) parts.push_back(term_text(term));
  return fmt::format("{}", fmt::join(parts, " U "));
}

EPS parse_set_expr(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace abasis
