#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyconf/vector_field.hpp"

namespace polyconf {

// Flat metric g = sum_i a_i (dx^i)^2 with a_1..a_p = +1, a_{p+1}..a_n = -1.
class Metric {
 public:
  Metric(std::size_t p, std::size_t q);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t dimension() const { return p_ + q_; }
  // a_{axis+1}, either +1 or -1.
  int sign(std::size_t axis) const { return axis < p_ ? 1 : -1; }

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  std::size_t p_;
  std::size_t q_;
};

// n x n rational matrix A^i_j, row i, column j (zero-based).
class LinearMap {
 public:
  explicit LinearMap(std::size_t dimension);

  static LinearMap identity(std::size_t dimension);
  // E_{ij}: single 1 at row i, column j.
  static LinearMap unit(std::size_t dimension, std::size_t row, std::size_t column);

  std::size_t dimension() const { return n_; }
  const Rational& operator()(std::size_t row, std::size_t column) const {
    return entries_[row * n_ + column];
  }
  Rational& operator()(std::size_t row, std::size_t column) { return entries_[row * n_ + column]; }

  Rational trace() const;
  LinearMap transpose() const;
  bool is_zero() const;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(const Rational& scalar);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(LinearMap a, const Rational& s) { return a *= s; }
  friend LinearMap operator*(const Rational& s, LinearMap a) { return a *= s; }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

LinearMap commutator(const LinearMap& a, const LinearMap& b);

// alpha = sum_i alpha_i dx^i
struct Covector {
  std::vector<Rational> entries;

  static Covector unit(std::size_t dimension, std::size_t axis);
  std::size_t dimension() const { return entries.size(); }
  // alpha(x) as a linear polynomial.
  Polynomial evaluate() const;
};

struct ConformalVerdict {
  bool is_conformal = false;
  // alpha_X with L_X g = alpha_X g, set iff conformal.
  std::optional<Polynomial> factor;
};

// (L_X g)_{ij} = a_j d_i X^j + a_i d_j X^i.
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;
PolynomialMatrix lie_derivative_metric(const VectorField& x, const Metric& m);

// Polynomials that all vanish iff X is conformal: for i < j the off-diagonal
// a_j d_i X^j + a_i d_j X^i, then d_i X^i - d_1 X^1 for i = 2..n.
std::vector<Polynomial> conformal_equations(const VectorField& x, const Metric& m);

ConformalVerdict conformal_check(const VectorField& x, const Metric& m);
bool is_conformal(const VectorField& x, const Metric& m);

// h* = -sum_i h^i d_i
VectorField h_star(const std::vector<Rational>& h);
// A* = -sum_{i,j} A^i_j x^j d_i
VectorField a_star(const LinearMap& a);
// alpha* = alpha(x) sum_i x^i d_i - 1/2 (sum_i a_i (x^i)^2) alpha^sharp,
// alpha^sharp = sum_i a_i alpha_i d_i
VectorField alpha_star(const Covector& alpha, const Metric& m);

// Inverse of a_star on homogeneous linear fields.
LinearMap linear_map_of(const VectorField& linear_field);

// {a_j E_ij - a_i E_ji : i < j}, lexicographic in (i, j).
std::vector<LinearMap> so_pq_basis(const Metric& m);

// Translations e_i*, then M* for the so(p,q) basis, then Id*, then (dx^i)*.
// (n+1)(n+2)/2 fields.
std::vector<VectorField> so_conformal_basis(const Metric& m);

// Index of Id* in so_conformal_basis(m).
std::size_t dilation_index(std::size_t dimension);

// g^{-1} A^T g
LinearMap g_conjugate(const LinearMap& a, const Metric& m);

struct GlDecomposition {
  LinearMap scalar;
  LinearMap skew;
  LinearMap selfconjugate;
};

// A = (tr A / n) Id + (A - A^dagger)/2 + ((A + A^dagger)/2 - (tr A / n) Id)
GlDecomposition decompose_gl(const LinearMap& a, const Metric& m);

struct QuadraticSplit {
  VectorField conformal;
  VectorField divergence_free;
};

// X = (1/n) alpha* + (X - (1/n) alpha*) with alpha(x) = div X.
QuadraticSplit quadratic_split(const VectorField& x, const Metric& m);

// Cauchy-Riemann equations for X^1 + i X^2 (n = 2).
bool holomorphic_check(const VectorField& x);

// Components of X in u-coordinates, x^1 + x^2 = 2u^1 and x^1 - x^2 = 2u^2.
VectorField lightcone_transform(const VectorField& x);
// Back from u-coordinates to x-coordinates.
VectorField lightcone_inverse(const VectorField& u);

// Component 1 free of the second variable and component 2 free of the first.
bool product_form_check(const VectorField& x);

// Basis of the conformal fields inside Vect_{<=cap}, from the conformal
// equations solved as a linear system.
std::vector<VectorField> conformal_solution_space(const Metric& m, int cap);

// Some conformal C with X - C of degree <= 1, if one exists.
std::optional<VectorField> conformal_linear_split(const VectorField& x, const Metric& m);

}  // namespace polyconf
