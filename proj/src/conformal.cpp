#include "polyconf/conformal.hpp"

#include <algorithm>

#include "polyconf/errors.hpp"
#include "polyconf/span.hpp"

namespace polyconf {

namespace {

void require_dimension(const VectorField& x, const Metric& m) {
  if (x.dimension() != m.dimension()) {
    throw DimensionMismatch("field dimension " + std::to_string(x.dimension()) +
                            " does not match signature dimension " +
                            std::to_string(m.dimension()));
  }
}

void require_plane(const VectorField& x) {
  if (x.dimension() != 2) throw PreconditionError("operation requires dimension 2");
}

void require_same(const LinearMap& a, const LinearMap& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("matrix dimensions differ");
}

// Quadratic form sum_i a_i (x^i)^2.
Polynomial metric_quadratic(const Metric& m) {
  const std::size_t n = m.dimension();
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 2;
    out.add_term(Monomial(std::move(e)), Rational(m.sign(i)));
  }
  return out;
}

}  // namespace

Metric::Metric(std::size_t p, std::size_t q) : p_(p), q_(q) {
  if (p + q < 2) {
    throw PreconditionError("signature (" + std::to_string(p) + "," + std::to_string(q) +
                            ") has dimension below 2");
  }
}

LinearMap::LinearMap(std::size_t dimension) : n_(dimension), entries_(dimension * dimension) {}

LinearMap LinearMap::identity(std::size_t dimension) {
  LinearMap out(dimension);
  for (std::size_t i = 0; i < dimension; ++i) out(i, i) = 1;
  return out;
}

LinearMap LinearMap::unit(std::size_t dimension, std::size_t row, std::size_t column) {
  if (row >= dimension || column >= dimension) throw PreconditionError("matrix index out of range");
  LinearMap out(dimension);
  out(row, column) = 1;
  return out;
}

Rational LinearMap::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

LinearMap LinearMap::transpose() const {
  LinearMap out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return polyconf::is_zero(r); });
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  require_same(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  require_same(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

LinearMap& LinearMap::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  require_same(a, b);
  const std::size_t n = a.n_;
  LinearMap out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) { return a * b - b * a; }

Covector Covector::unit(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw PreconditionError("covector index out of range");
  Covector out{std::vector<Rational>(dimension)};
  out.entries[axis] = 1;
  return out;
}

Polynomial Covector::evaluate() const {
  const std::size_t n = entries.size();
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) out.add_term(Monomial::unit(n, i), entries[i]);
  return out;
}

PolynomialMatrix lie_derivative_metric(const VectorField& x, const Metric& m) {
  require_dimension(x, m);
  const std::size_t n = m.dimension();
  PolynomialMatrix out(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Polynomial entry = partial(x[j], i) * Rational(m.sign(j)) +
                         partial(x[i], j) * Rational(m.sign(i));
      out[j][i] = entry;
      out[i][j] = std::move(entry);
    }
  }
  return out;
}

std::vector<Polynomial> conformal_equations(const VectorField& x, const Metric& m) {
  require_dimension(x, m);
  const std::size_t n = m.dimension();
  std::vector<Polynomial> out;
  out.reserve(n * (n - 1) / 2 + n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(partial(x[j], i) * Rational(m.sign(j)) +
                    partial(x[i], j) * Rational(m.sign(i)));
    }
  }
  const Polynomial first = partial(x[0], 0);
  for (std::size_t i = 1; i < n; ++i) out.push_back(partial(x[i], i) - first);
  return out;
}

ConformalVerdict conformal_check(const VectorField& x, const Metric& m) {
  ConformalVerdict verdict;
  auto equations = conformal_equations(x, m);
  verdict.is_conformal = std::all_of(equations.begin(), equations.end(),
                                     [](const Polynomial& p) { return p.is_zero(); });
  if (verdict.is_conformal) verdict.factor = partial(x[0], 0) * Rational(2);
  return verdict;
}

bool is_conformal(const VectorField& x, const Metric& m) { return conformal_check(x, m).is_conformal; }

VectorField h_star(const std::vector<Rational>& h) {
  const std::size_t n = h.size();
  VectorField out(n);
  for (std::size_t i = 0; i < n; ++i) out.component(i).add_term(Monomial(n), -h[i]);
  return out;
}

VectorField a_star(const LinearMap& a) {
  const std::size_t n = a.dimension();
  VectorField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.component(i).add_term(Monomial::unit(n, j), -a(i, j));
  }
  return out;
}

VectorField alpha_star(const Covector& alpha, const Metric& m) {
  const std::size_t n = m.dimension();
  if (alpha.dimension() != n) throw DimensionMismatch("covector length does not match signature");
  const Polynomial form = alpha.evaluate();
  const Polynomial half_quadratic = metric_quadratic(m) * Rational(1, 2);
  VectorField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial c = form * Polynomial::variable(n, i);
    c -= half_quadratic * Rational(m.sign(i) * alpha.entries[i]);
    out.component(i) = std::move(c);
  }
  return out;
}

LinearMap linear_map_of(const VectorField& linear_field) {
  if (!linear_field.is_homogeneous(1)) {
    throw PreconditionError("field is not homogeneous linear: " + to_string(linear_field));
  }
  const std::size_t n = linear_field.dimension();
  LinearMap out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = -linear_field[i].coefficient(Monomial::unit(n, j));
    }
  }
  return out;
}

std::vector<LinearMap> so_pq_basis(const Metric& m) {
  const std::size_t n = m.dimension();
  std::vector<LinearMap> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(Rational(m.sign(j)) * LinearMap::unit(n, i, j) -
                    Rational(m.sign(i)) * LinearMap::unit(n, j, i));
    }
  }
  return out;
}

std::size_t dilation_index(std::size_t dimension) {
  return dimension + dimension * (dimension - 1) / 2;
}

std::vector<VectorField> so_conformal_basis(const Metric& m) {
  const std::size_t n = m.dimension();
  std::vector<VectorField> out;
  out.reserve((n + 1) * (n + 2) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> h(n);
    h[i] = 1;
    out.push_back(h_star(h));
  }
  for (const auto& rotation : so_pq_basis(m)) out.push_back(a_star(rotation));
  out.push_back(a_star(LinearMap::identity(n)));
  for (std::size_t i = 0; i < n; ++i) out.push_back(alpha_star(Covector::unit(n, i), m));
  return out;
}

LinearMap g_conjugate(const LinearMap& a, const Metric& m) {
  const std::size_t n = a.dimension();
  if (n != m.dimension()) throw DimensionMismatch("matrix dimension does not match signature");
  LinearMap out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(j, i) * (m.sign(i) * m.sign(j));
  }
  return out;
}

GlDecomposition decompose_gl(const LinearMap& a, const Metric& m) {
  const std::size_t n = a.dimension();
  const LinearMap conjugate = g_conjugate(a, m);
  LinearMap scalar = LinearMap::identity(n) * (a.trace() / Rational(static_cast<long>(n)));
  LinearMap skew = (a - conjugate) * Rational(1, 2);
  LinearMap selfconjugate = (a + conjugate) * Rational(1, 2) - scalar;
  return {std::move(scalar), std::move(skew), std::move(selfconjugate)};
}

QuadraticSplit quadratic_split(const VectorField& x, const Metric& m) {
  require_dimension(x, m);
  if (!x.is_homogeneous(2)) {
    throw PreconditionError("quadratic split needs a homogeneous quadratic field, got " +
                            to_string(x));
  }
  const std::size_t n = m.dimension();
  const Polynomial div = divergence(x);
  Covector alpha{std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) alpha.entries[i] = div.coefficient(Monomial::unit(n, i));
  VectorField conformal = alpha_star(alpha, m) * Rational(1, static_cast<long>(n));
  VectorField rest = x - conformal;
  return {std::move(conformal), std::move(rest)};
}

bool holomorphic_check(const VectorField& x) {
  require_plane(x);
  return partial(x[0], 0) == partial(x[1], 1) && partial(x[0], 1) == -partial(x[1], 0);
}

VectorField lightcone_transform(const VectorField& x) {
  require_plane(x);
  // x = (u1 + u2, u1 - u2)
  const std::vector<Rational> to_x{1, 1, 1, -1};
  const Rational half(1, 2);
  std::vector<Polynomial> components{
      substitute_linear((x[0] + x[1]) * half, to_x),
      substitute_linear((x[0] - x[1]) * half, to_x)};
  return VectorField(std::move(components));
}

VectorField lightcone_inverse(const VectorField& u) {
  require_plane(u);
  // u = ((x1 + x2)/2, (x1 - x2)/2)
  const Rational half(1, 2);
  const std::vector<Rational> to_u{half, half, half, -half};
  std::vector<Polynomial> components{substitute_linear(u[0] + u[1], to_u),
                                     substitute_linear(u[0] - u[1], to_u)};
  return VectorField(std::move(components));
}

bool product_form_check(const VectorField& x) {
  require_plane(x);
  return partial(x[0], 1).is_zero() && partial(x[1], 0).is_zero();
}

std::vector<VectorField> conformal_solution_space(const Metric& m, int cap) {
  return solution_space(m.dimension(), cap,
                        [&m](const VectorField& x) { return conformal_equations(x, m); });
}

std::optional<VectorField> conformal_linear_split(const VectorField& x, const Metric& m) {
  require_dimension(x, m);
  const std::size_t n = m.dimension();
  const int cap = std::max(x.degree(), 1);
  const auto conformal = conformal_solution_space(m, cap);
  std::vector<CoordinateVector> columns;
  columns.reserve(conformal.size() + n * n);
  for (const auto& c : conformal) columns.push_back(coordinates(c, cap));
  for (const auto& mono : monomials_of_degree(n, 1)) {
    for (std::size_t i = 0; i < n; ++i) {
      columns.push_back(coordinates(VectorField::monomial_field(Rational(1), mono, i), cap));
    }
  }
  auto solution = solve_combination(columns, coordinates(x, cap));
  if (!solution) return std::nullopt;
  VectorField out(n);
  for (std::size_t k = 0; k < conformal.size(); ++k) {
    if (!is_zero((*solution)[k])) out += conformal[k] * (*solution)[k];
  }
  return out;
}

}  // namespace polyconf
