#include "polyconf/vector_field.hpp"

#include <algorithm>

#include "polyconf/errors.hpp"

namespace polyconf {

namespace {

void require_same_dimension(const VectorField& a, const VectorField& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("vector field dimensions differ: " + std::to_string(a.dimension()) +
                            " vs " + std::to_string(b.dimension()));
  }
}

}  // namespace

VectorField::VectorField(std::size_t dimension)
    : components_(dimension, Polynomial(dimension)) {}

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.dimension() != components_.size()) {
      throw DimensionMismatch("component dimension does not match number of components");
    }
  }
}

VectorField VectorField::monomial_field(const Rational& coefficient, const Monomial& monomial,
                                        std::size_t axis) {
  VectorField out(monomial.dimension());
  if (axis >= out.dimension()) throw PreconditionError("direction index out of range");
  out.components_[axis].add_term(monomial, coefficient);
  return out;
}

VectorField VectorField::euler(std::size_t dimension) {
  VectorField out(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    out.components_[i] = Polynomial::variable(dimension, i);
  }
  return out;
}

int VectorField::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

bool VectorField::is_homogeneous(int degree) const {
  return std::all_of(components_.begin(), components_.end(),
                     [degree](const Polynomial& p) { return p.is_homogeneous(degree); });
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& scalar) {
  for (auto& c : components_) c *= scalar;
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField out(*this);
  for (auto& c : out.components_) c = -c;
  return out;
}

Polynomial apply(const VectorField& x, const Polynomial& f) {
  if (x.dimension() != f.dimension()) throw DimensionMismatch("field and function dimensions differ");
  Polynomial out(x.dimension());
  for (std::size_t j = 0; j < x.dimension(); ++j) {
    if (x[j].is_zero()) continue;
    out += x[j] * partial(f, j);
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_dimension(x, y);
  const std::size_t n = x.dimension();
  std::vector<Polynomial> components;
  components.reserve(n);
  for (std::size_t i = 0; i < n; ++i) components.push_back(apply(x, y[i]) - apply(y, x[i]));
  return VectorField(std::move(components));
}

Polynomial divergence(const VectorField& x) {
  Polynomial out(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out += partial(x[i], i);
  return out;
}

VectorField homogeneous_part(const VectorField& x, int degree) {
  std::vector<Polynomial> components;
  components.reserve(x.dimension());
  for (const auto& c : x.components()) components.push_back(homogeneous_part(c, degree));
  return VectorField(std::move(components));
}

std::size_t field_space_dimension(std::size_t dimension, int cap) {
  return dimension * count_monomials_up_to(dimension, cap);
}

std::size_t homogeneous_field_space_dimension(std::size_t dimension, int degree) {
  return dimension * count_monomials_of_degree(dimension, degree);
}

std::pair<std::size_t, std::size_t> stratum_columns(std::size_t dimension, int degree) {
  return {field_space_dimension(dimension, degree - 1), field_space_dimension(dimension, degree)};
}

CoordinateVector coordinates(const VectorField& x, int cap) {
  if (x.degree() > cap) {
    throw DegreeCapExceeded("field of degree " + std::to_string(x.degree()) +
                            " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = x.dimension();
  CoordinateVector v(field_space_dimension(n, cap));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, c] : x[i].terms()) v[monomial_rank(m) * n + i] = c;
  }
  return v;
}

VectorField field_from_coordinates(std::size_t dimension, int cap, const CoordinateVector& v) {
  if (v.size() != field_space_dimension(dimension, cap)) {
    throw DimensionMismatch("coordinate vector length does not match Vect_{<=cap}");
  }
  VectorField out(dimension);
  auto monomials = monomials_up_to(dimension, cap);
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (std::size_t i = 0; i < dimension; ++i) {
      const Rational& c = v[r * dimension + i];
      if (!is_zero(c)) out.component(i).add_term(monomials[r], c);
    }
  }
  return out;
}

std::string to_string(const VectorField& x) {
  std::string out;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    const std::string direction = " d" + std::to_string(i + 1);
    for (const auto& [m, c] : x[i].terms()) {
      Rational magnitude = abs(c);
      bool negative = sgn(c) < 0;
      std::string body;
      if (m.degree() == 0) {
        body = to_string(magnitude);
      } else if (magnitude == 1) {
        body = to_string(m);
      } else {
        body = to_string(magnitude) + " " + to_string(m);
      }
      body += direction;
      if (out.empty()) {
        out = negative ? "-" + body : body;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace polyconf
