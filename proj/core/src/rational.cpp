#include "mahlerzero/rational.hpp"

#include <cctype>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

  std::size_t pos = begin;
  bool negative = false;
  if (pos < end && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return Integer(std::string(text.substr(start, pos - start)));
  };
  Integer num = read_digits("digits");
  Integer den = 1;
  if (pos < end && text[pos] == '/') {
    ++pos;
    den = read_digits("denominator digits");
    if (den == 0) throw ParseError("zero denominator", pos - 1);
  }
  if (pos != end) throw ParseError("unexpected character in rational", pos);
  Rational r(negative ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

}  // namespace mahlerzero
