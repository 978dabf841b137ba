#include "mahlerzero/parser.hpp"

#include <cctype>
#include <string>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Vars vars) : text_(text), vars_(static_cast<unsigned>(vars)) {}

  BiPoly parse() {
    BiPoly value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool digit_follows(std::size_t at) const {
    return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
  }

  BiPoly expr() {
    bool negate = false;
    if (const char c = peek(); c == '+' || (c == '-' && !digit_follows(pos_ + 1))) {
      negate = c == '-';
      ++pos_;
    }
    BiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      if (c == '+')
        acc += term();
      else
        acc -= term();
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!digit_follows(pos_)) fail("exponent must be a natural number");
      b = pow(b, natural_exponent());
    }
    return b;
  }

  std::size_t natural_exponent() {
    const std::size_t start = pos_;
    while (digit_follows(pos_)) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    return static_cast<std::size_t>(std::stoul(digits));
  }

  Integer nat() {
    const std::size_t start = pos_;
    while (digit_follows(pos_)) ++pos_;
    if (pos_ == start) fail("expected a natural number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BiPoly base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'z' || c == 'y') {
      const unsigned bit = c == 'z' ? static_cast<unsigned>(Vars::z) : static_cast<unsigned>(Vars::y);
      if ((vars_ & bit) == 0) fail(std::string("variable '") + c + "' is not allowed here");
      ++pos_;
      return c == 'z' ? BiPoly(Poly::z()) : BiPoly::y();
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return BiPoly(Poly(rational()));
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational rational() {
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
      if (!digit_follows(pos_)) fail("expected digits after '-'");
    }
    Integer num = nat();
    Integer den = 1;
    // Lookahead: '/' only continues a rational literal.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = nat();
      if (den == 0) fail("zero denominator");
    }
    Rational r(negative ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
  }

  std::string_view text_;
  unsigned vars_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text, Vars vars) { return Parser(text, vars).parse(); }

Poly parse_univariate(std::string_view text) {
  const BiPoly p = parse_poly(text, Vars::z);
  return p.coeff(0);
}

}  // namespace mahlerzero
