#include "loopalg/rational.hpp"

#include <cctype>

#include "loopalg/errors.hpp"

namespace loopalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw parse_error("expected digits in rational '" + std::string(text) + "'", j);
    return j;
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  Integer num(std::string(text.substr(0, num_end)));
  Integer den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw parse_error("unexpected character in rational", num_end);
    std::size_t den_end = digits(num_end + 1);
    if (den_end != text.size()) throw parse_error("trailing characters in rational", den_end);
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) throw parse_error("zero denominator", num_end + 1);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& q, std::int64_t e) {
  Rational base = q;
  if (e < 0) {
    base = 1 / q;
    e = -e;
  }
  Rational result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace loopalg
