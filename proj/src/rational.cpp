#include "polyconf/rational.hpp"

#include <cctype>

#include "polyconf/errors.hpp"

namespace polyconf {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what, pos);
    return Integer(std::string(text.substr(start, pos - start)));
  };
  Integer num = read_digits("numerator");
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    den = read_digits("denominator");
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Rational value(negative ? Integer(-num) : num, den);
  value.canonicalize();
  return value;
}

}  // namespace polyconf
