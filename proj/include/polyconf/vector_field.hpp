#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyconf/polynomial.hpp"

namespace polyconf {

// Dense coordinates of a field in Vect_{<=d}. Basis element x^m d_i sits at
// index rank(m) * n + i, i.e. ordered by (degree, monomial, component).
using CoordinateVector = std::vector<Rational>;

// X = sum_i X^i d_i on R^n. Component i multiplies d_{i+1} (zero-based).
class VectorField {
 public:
  explicit VectorField(std::size_t dimension);
  explicit VectorField(std::vector<Polynomial> components);

  // coefficient * monomial * d_{axis+1}
  static VectorField monomial_field(const Rational& coefficient, const Monomial& monomial,
                                    std::size_t axis);
  // sum_i x^i d_i
  static VectorField euler(std::size_t dimension);

  std::size_t dimension() const { return components_.size(); }
  const Polynomial& operator[](std::size_t axis) const { return components_[axis]; }
  Polynomial& component(std::size_t axis) { return components_[axis]; }
  const std::vector<Polynomial>& components() const { return components_; }

  // Max component degree, -1 for the zero field.
  int degree() const;
  bool is_zero() const;
  bool is_homogeneous(int degree) const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& scalar);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& s) { return a *= s; }
  friend VectorField operator*(const Rational& s, VectorField a) { return a *= s; }
  VectorField operator-() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i), i.e. X o Y - Y o X on functions.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

Polynomial divergence(const VectorField& x);

// X(f) = sum_i X^i d_i f
Polynomial apply(const VectorField& x, const Polynomial& f);

VectorField homogeneous_part(const VectorField& x, int degree);

// n * C(n + cap, n)
std::size_t field_space_dimension(std::size_t dimension, int cap);
// n * C(n + degree - 1, degree)
std::size_t homogeneous_field_space_dimension(std::size_t dimension, int degree);

// Throws DegreeCapExceeded when deg X > cap.
CoordinateVector coordinates(const VectorField& x, int cap);
VectorField field_from_coordinates(std::size_t dimension, int cap, const CoordinateVector& v);

// Coordinate range [begin, end) of the homogeneous degree-k block.
std::pair<std::size_t, std::size_t> stratum_columns(std::size_t dimension, int degree);

// Canonical text, e.g. "x1^2 d2", "-x1 d1 + 1/2 x2^2 d2", "0".
std::string to_string(const VectorField& x);

}  // namespace polyconf
