#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polyconf/rational.hpp"

namespace polyconf {

// Exponent vector of a monomial x1^e1 * ... * xn^en.
class Monomial {
 public:
  explicit Monomial(std::size_t dimension) : exponents_(dimension, 0) {}
  explicit Monomial(std::vector<unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::vector<unsigned>(exponents)) {}

  static Monomial unit(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const { return exponents_.size(); }
  int degree() const { return degree_; }
  unsigned operator[](std::size_t axis) const { return exponents_[axis]; }
  std::span<const unsigned> exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
  int degree_ = 0;
};

// Canonical order: total degree ascending, then within a degree the exponent
// tuples in descending lexicographic order (x1^2, x1*x2, x2^2, ...).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// "x1^2*x2", or "1" for the constant monomial.
std::string to_string(const Monomial& monomial);

// All monomials in `dimension` variables with total degree <= cap, in
// canonical order. The position in this list is the monomial's rank.
std::vector<Monomial> monomials_up_to(std::size_t dimension, int cap);

// All monomials of total degree exactly `degree`, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t dimension, int degree);

// Rank of `monomial` in monomials_up_to(dimension, cap) for any cap >= its
// degree. Lower degrees come first, so ranks do not depend on the cap.
std::size_t monomial_rank(const Monomial& monomial);

// C(n + d, n): number of monomials of degree <= d in n variables.
std::size_t count_monomials_up_to(std::size_t dimension, int cap);
std::size_t count_monomials_of_degree(std::size_t dimension, int degree);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t dimension);

  static Polynomial constant(std::size_t dimension, const Rational& value);
  // x_{axis+1}; axes are zero-based in the C++ API.
  static Polynomial variable(std::size_t dimension, std::size_t axis);
  static Polynomial term(const Rational& coefficient, const Monomial& monomial);

  std::size_t dimension() const { return dimension_; }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous(int degree) const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& monomial) const;

  // Adds `coefficient * monomial`, dropping the term if it cancels.
  void add_term(const Monomial& monomial, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dimension_;
  TermMap terms_;
};

Polynomial partial(const Polynomial& p, std::size_t axis);
Polynomial homogeneous_part(const Polynomial& p, int degree);

// p(M x) for an n x n rational matrix M given row-major.
Polynomial substitute_linear(const Polynomial& p, std::span<const Rational> matrix);

Polynomial power(const Polynomial& p, unsigned exponent);

// Canonical text: terms in canonical order, "-x1 + 1/2 x1^2*x2", "0" for zero.
std::string to_string(const Polynomial& p);

}  // namespace polyconf
