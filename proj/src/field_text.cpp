#include "polyconf/field_text.hpp"

#include <cctype>
#include <optional>

#include "polyconf/errors.hpp"

namespace polyconf {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::size_t dimension) : text_(text), n_(dimension) {
    if (dimension == 0) throw PreconditionError("dimension must be positive");
  }

  std::size_t position() const { return pos_; }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  // Literal "0" on its own.
  bool is_zero_literal() {
    std::size_t p = 0;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '0') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  struct ScalarTerm {
    Rational coefficient;
    Monomial monomial;
    bool bare;  // neither coefficient nor factor
  };

  // Parses [sign] [coeff] {factor}; `first` allows a bare leading sign.
  ScalarTerm scalar_term(bool first) {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError(first ? "empty input" : "expected a term", pos_);
    }
    Rational sign = 1;
    if (first && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    std::optional<Rational> coefficient;
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = read_coefficient();
    }
    std::vector<unsigned> exponents(n_, 0);
    bool any_factor = false;
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        if (!coefficient && !any_factor) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
      if (pos_ >= text_.size() || peek() != 'x') break;
      const std::size_t at = pos_;
      ++pos_;
      unsigned long index = read_integer("variable index");
      if (index == 0 || index > n_) {
        throw ParseError("variable index x" + std::to_string(index) + " out of range for n = " +
                             std::to_string(n_),
                         at);
      }
      unsigned long power = 1;
      skip_space();
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        power = read_integer("exponent");
      }
      exponents[index - 1] += static_cast<unsigned>(power);
      any_factor = true;
    }
    return {sign * coefficient.value_or(Rational(1)), Monomial(std::move(exponents)),
            !coefficient && !any_factor};
  }

  std::size_t direction() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || peek() != 'd') throw ParseError("expected direction 'd<i>'", pos_);
    ++pos_;
    unsigned long index = read_integer("direction index");
    if (index == 0 || index > n_) {
      throw ParseError("direction index d" + std::to_string(index) + " out of range for n = " +
                           std::to_string(n_),
                       at);
    }
    return index - 1;
  }

  // Consumes "+" or "-" between terms and returns the sign.
  Rational separator() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected '+' or '-'", pos_);
    char c = peek();
    if (c != '+' && c != '-') {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    ++pos_;
    return c == '-' ? Rational(-1) : Rational(1);
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  unsigned long read_integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ < text_.size()) {
        throw ParseError(std::string("expected ") + what + ", found '" + text_[pos_] + "'", pos_);
      }
      throw ParseError(std::string("expected ") + what, pos_);
    }
    if (pos_ - start > 9) throw ParseError(std::string(what) + " too large", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Rational read_coefficient() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    Integer den = 1;
    skip_space();
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den_start == pos_) throw ParseError("expected denominator", pos_);
      den = Integer(std::string(text_.substr(den_start, pos_ - den_start)));
      if (den == 0) throw ParseError("zero denominator", den_start);
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

}  // namespace

VectorField parse_field(std::string_view text, std::size_t dimension) {
  TermParser parser(text, dimension);
  VectorField out(dimension);
  if (parser.is_zero_literal()) return out;
  bool first = true;
  do {
    Rational sign = first ? Rational(1) : parser.separator();
    auto term = parser.scalar_term(first);
    std::size_t axis = parser.direction();
    out.component(axis).add_term(term.monomial, sign * term.coefficient);
    first = false;
  } while (!parser.at_end());
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t dimension) {
  TermParser parser(text, dimension);
  Polynomial out(dimension);
  if (parser.is_zero_literal()) return out;
  bool first = true;
  do {
    Rational sign = first ? Rational(1) : parser.separator();
    const std::size_t at = parser.position();
    auto term = parser.scalar_term(first);
    if (term.bare) throw ParseError("expected a coefficient or a variable", at);
    out.add_term(term.monomial, sign * term.coefficient);
    first = false;
  } while (!parser.at_end());
  return out;
}

std::string print_field(const VectorField& x) { return to_string(x); }

}  // namespace polyconf
