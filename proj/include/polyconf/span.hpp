#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyconf/vector_field.hpp"

namespace polyconf {

// Reduced row-echelon basis of a subspace of Vect_{<=cap}(R^n), over the
// coordinates of `coordinates()`. Rows are sorted by pivot column, every
// pivot entry is 1, and each pivot column is zero in all other rows. Since
// the RREF of a subspace is unique, two spans are equal iff their rows are.
class SpanBasis {
 public:
  SpanBasis(std::size_t dimension, int cap);

  std::size_t ambient_dimension() const { return n_; }
  int degree_cap() const { return cap_; }
  // n * C(n + cap, n)
  std::size_t full_dimension() const { return columns_; }
  std::size_t dimension() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == columns_; }

  const std::vector<CoordinateVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // In-place insertion; true iff the dimension grew.
  bool insert(const VectorField& x);
  bool insert_coordinates(CoordinateVector v);

  bool contains(const VectorField& x) const;
  // Remainder of v after eliminating every pivot column.
  CoordinateVector reduce(CoordinateVector v) const;

  // dim(S ∩ Vect_{<=k}).
  std::size_t dimension_up_to(int degree) const;

  std::vector<VectorField> basis_fields() const;

  // Structural check of the reduced echelon invariant.
  bool is_reduced_echelon() const;

  friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

 private:
  void check_field(const VectorField& x) const;

  std::size_t n_;
  int cap_;
  std::size_t columns_;
  std::vector<CoordinateVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Functional form: returns the enlarged span and whether it grew.
std::pair<SpanBasis, bool> span_insert(const SpanBasis& s, const VectorField& x);

// Span of all monomial fields x^m d_i with deg m <= cap.
SpanBasis full_span(std::size_t dimension, int cap);

// Brings `rows` to reduced row-echelon form using only the first
// `pivot_columns` columns as pivot candidates. Rows past the returned pivot
// count are zero on those columns. Returns the pivot columns in row order.
std::vector<std::size_t> reduce_rows(std::vector<std::vector<Rational>>& rows,
                                     std::size_t pivot_columns);

std::size_t rank(std::vector<std::vector<Rational>> rows);

// Basis of {c : sum_j rows[i][j] c_j = 0 for all i}, one vector per free
// column, in increasing free-column order.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t columns);

// Coefficients c with sum_k c_k vectors[k] = target, free unknowns set to zero.
// nullopt when the target is outside the span.
std::optional<std::vector<Rational>> solve_combination(std::span<const CoordinateVector> vectors,
                                                       const CoordinateVector& target);

using LinearConstraints = std::function<std::vector<Polynomial>(const VectorField&)>;

// Basis of {X in Vect_{<=cap} : every polynomial in constraints(X) vanishes}.
// `constraints` must be linear in X and always return the same number of
// polynomials.
std::vector<VectorField> solution_space(std::size_t dimension, int cap,
                                        const LinearConstraints& constraints);

}  // namespace polyconf
