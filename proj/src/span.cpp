#include "polyconf/span.hpp"

#include <algorithm>
#include <map>

#include "polyconf/errors.hpp"

namespace polyconf {

namespace {

std::size_t leading_column(const CoordinateVector& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!is_zero(v[j])) return j;
  }
  return v.size();
}

// v -= factor * row, skipping the zero entries of row.
void subtract_multiple(std::vector<Rational>& v, const Rational& factor,
                       const std::vector<Rational>& row, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (!is_zero(row[j])) v[j] -= factor * row[j];
  }
}

}  // namespace

SpanBasis::SpanBasis(std::size_t dimension, int cap)
    : n_(dimension), cap_(cap), columns_(field_space_dimension(dimension, cap)) {
  if (dimension == 0) throw PreconditionError("span dimension must be positive");
  if (cap < 0) throw PreconditionError("degree cap must be non-negative");
}

void SpanBasis::check_field(const VectorField& x) const {
  if (x.dimension() != n_) {
    throw DimensionMismatch("field dimension " + std::to_string(x.dimension()) +
                            " does not match span dimension " + std::to_string(n_));
  }
  if (x.degree() > cap_) {
    throw DegreeCapExceeded("field of degree " + std::to_string(x.degree()) +
                            " exceeds span cap " + std::to_string(cap_));
  }
}

CoordinateVector SpanBasis::reduce(CoordinateVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (is_zero(v[p])) continue;
    Rational factor = v[p];
    subtract_multiple(v, factor, rows_[r], p);
  }
  return v;
}

bool SpanBasis::insert(const VectorField& x) {
  check_field(x);
  return insert_coordinates(coordinates(x, cap_));
}

bool SpanBasis::insert_coordinates(CoordinateVector v) {
  if (v.size() != columns_) throw DimensionMismatch("coordinate vector has wrong length");
  v = reduce(std::move(v));
  const std::size_t p = leading_column(v);
  if (p == v.size()) return false;
  Rational inverse = 1 / v[p];
  for (std::size_t j = p; j < v.size(); ++j) {
    if (!is_zero(v[j])) v[j] *= inverse;
  }
  for (auto& row : rows_) {
    if (is_zero(row[p])) continue;
    Rational factor = row[p];
    subtract_multiple(row, factor, v, p);
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto offset = at - pivots_.begin();
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool SpanBasis::contains(const VectorField& x) const {
  check_field(x);
  CoordinateVector rest = reduce(coordinates(x, cap_));
  return leading_column(rest) == rest.size();
}

std::size_t SpanBasis::dimension_up_to(int degree) const {
  if (degree >= cap_) return rows_.size();
  if (degree < 0) return 0;
  const std::size_t split = field_space_dimension(n_, degree);
  std::vector<std::vector<Rational>> tails;
  tails.reserve(rows_.size());
  for (const auto& row : rows_) tails.emplace_back(row.begin() + split, row.end());
  return rows_.size() - rank(std::move(tails));
}

std::vector<VectorField> SpanBasis::basis_fields() const {
  std::vector<VectorField> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(field_from_coordinates(n_, cap_, row));
  return out;
}

bool SpanBasis::is_reduced_echelon() const {
  if (rows_.size() != pivots_.size()) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.size() != columns_) return false;
    if (leading_column(row) != pivots_[r]) return false;
    if (row[pivots_[r]] != 1) return false;
    if (r > 0 && pivots_[r] <= pivots_[r - 1]) return false;
    for (std::size_t other = 0; other < rows_.size(); ++other) {
      if (other != r && !is_zero(rows_[other][pivots_[r]])) return false;
    }
  }
  return true;
}

std::pair<SpanBasis, bool> span_insert(const SpanBasis& s, const VectorField& x) {
  SpanBasis out(s);
  bool grew = out.insert(x);
  return {std::move(out), grew};
}

SpanBasis full_span(std::size_t dimension, int cap) {
  SpanBasis s(dimension, cap);
  for (const auto& m : monomials_up_to(dimension, cap)) {
    for (std::size_t i = 0; i < dimension; ++i) {
      s.insert(VectorField::monomial_field(Rational(1), m, i));
    }
  }
  return s;
}

std::vector<std::size_t> reduce_rows(std::vector<std::vector<Rational>>& rows,
                                     std::size_t pivot_columns) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < pivot_columns && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && is_zero(rows[found][col])) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    auto& pivot_row = rows[next];
    Rational inverse = 1 / pivot_row[col];
    for (std::size_t j = col; j < pivot_row.size(); ++j) {
      if (!is_zero(pivot_row[j])) pivot_row[j] *= inverse;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || is_zero(rows[r][col])) continue;
      Rational factor = rows[r][col];
      subtract_multiple(rows[r], factor, pivot_row, col);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return reduce_rows(rows, columns).size();
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t columns) {
  for (const auto& row : rows) {
    if (row.size() != columns) throw DimensionMismatch("constraint row has wrong length");
  }
  auto pivots = reduce_rows(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_combination(std::span<const CoordinateVector> vectors,
                                                       const CoordinateVector& target) {
  const std::size_t unknowns = vectors.size();
  const std::size_t equations = target.size();
  for (const auto& v : vectors) {
    if (v.size() != equations) throw DimensionMismatch("coordinate vectors differ in length");
  }
  std::vector<std::vector<Rational>> system;
  for (std::size_t r = 0; r < equations; ++r) {
    std::vector<Rational> row(unknowns + 1);
    bool any = !is_zero(target[r]);
    for (std::size_t k = 0; k < unknowns; ++k) {
      row[k] = vectors[k][r];
      any = any || !is_zero(row[k]);
    }
    row[unknowns] = target[r];
    if (any) system.push_back(std::move(row));
  }
  auto pivots = reduce_rows(system, unknowns);
  // Rows past the pivots are zero on every unknown.
  for (std::size_t r = pivots.size(); r < system.size(); ++r) {
    if (!is_zero(system[r][unknowns])) return std::nullopt;
  }
  std::vector<Rational> solution(unknowns);
  for (std::size_t r = 0; r < pivots.size(); ++r) solution[pivots[r]] = system[r][unknowns];
  return solution;
}

std::vector<VectorField> solution_space(std::size_t dimension, int cap,
                                        const LinearConstraints& constraints) {
  const std::size_t columns = field_space_dimension(dimension, cap);
  const auto monomials = monomials_up_to(dimension, cap);
  // (constraint index, monomial rank) -> equation row
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> equations;
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (std::size_t i = 0; i < dimension; ++i) {
      const std::size_t column = r * dimension + i;
      auto images = constraints(VectorField::monomial_field(Rational(1), monomials[r], i));
      for (std::size_t c = 0; c < images.size(); ++c) {
        for (const auto& [m, coeff] : images[c].terms()) {
          auto [it, fresh] = equations.try_emplace({c, monomial_rank(m)});
          if (fresh) it->second.resize(columns);
          it->second[column] += coeff;
        }
      }
    }
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(equations.size());
  for (auto& entry : equations) rows.push_back(std::move(entry.second));
  std::vector<VectorField> basis;
  for (auto& v : nullspace(std::move(rows), columns)) {
    basis.push_back(field_from_coordinates(dimension, cap, v));
  }
  return basis;
}

}  // namespace polyconf
