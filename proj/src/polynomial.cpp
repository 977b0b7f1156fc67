#include "polyconf/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "polyconf/errors.hpp"

namespace polyconf {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("polynomial dimensions differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

// Exponent tuples of the given total degree, descending lexicographic.
void compositions(std::size_t dimension, unsigned remaining, std::vector<unsigned>& prefix,
                  std::vector<Monomial>& out) {
  if (prefix.size() + 1 == dimension) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    prefix.push_back(e);
    compositions(dimension, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
  degree_ = static_cast<int>(std::accumulate(exponents_.begin(), exponents_.end(), 0u));
}

Monomial Monomial::unit(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw PreconditionError("axis out of range");
  std::vector<unsigned> e(dimension, 0);
  e[axis] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_dimension(dimension(), other.dimension());
  std::vector<unsigned> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::string to_string(const Monomial& monomial) {
  std::string out;
  for (std::size_t i = 0; i < monomial.dimension(); ++i) {
    unsigned e = monomial[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t dimension, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || dimension == 0) return out;
  std::vector<unsigned> prefix;
  compositions(dimension, static_cast<unsigned>(degree), prefix, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t dimension, int cap) {
  std::vector<Monomial> out;
  for (int k = 0; k <= cap; ++k) {
    auto layer = monomials_of_degree(dimension, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::size_t count_monomials_up_to(std::size_t dimension, int cap) {
  if (cap < 0) return 0;
  return binomial(dimension + static_cast<std::size_t>(cap), dimension);
}

std::size_t count_monomials_of_degree(std::size_t dimension, int degree) {
  if (degree < 0) return 0;
  if (dimension == 0) return degree == 0 ? 1 : 0;
  return binomial(dimension + static_cast<std::size_t>(degree) - 1, dimension - 1);
}

std::size_t monomial_rank(const Monomial& monomial) {
  const std::size_t n = monomial.dimension();
  std::size_t rank = count_monomials_up_to(n, monomial.degree() - 1);
  unsigned remaining = static_cast<unsigned>(monomial.degree());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Tuples that agree up to position i and are larger at i come first.
    for (unsigned e = monomial[i] + 1; e <= remaining; ++e) {
      rank += count_monomials_of_degree(n - i - 1, static_cast<int>(remaining - e));
    }
    remaining -= monomial[i];
  }
  return rank;
}

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(Monomial(dimension), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t axis) {
  Polynomial p(dimension);
  p.add_term(Monomial::unit(dimension, axis), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& coefficient, const Monomial& monomial) {
  Polynomial p(monomial.dimension());
  p.add_term(monomial, coefficient);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return t.first.degree() == degree; });
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  require_same_dimension(dimension_, monomial.dimension());
  if (polyconf::is_zero(coefficient)) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (polyconf::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(dimension_, other.dimension_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(dimension_, other.dimension_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (polyconf::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& entry : out.terms_) entry.second = -entry.second;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a.dimension_, b.dimension_);
  Polynomial out(a.dimension_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial partial(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension()) {
    throw PreconditionError("partial derivative axis " + std::to_string(axis + 1) +
                            " out of range for dimension " + std::to_string(p.dimension()));
  }
  Polynomial out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[axis];
    if (e == 0) continue;
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    exps[axis] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Polynomial homogeneous_part(const Polynomial& p, int degree) {
  Polynomial out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == degree) out.add_term(m, c);
  }
  return out;
}

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial out = Polynomial::constant(p.dimension(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

Polynomial substitute_linear(const Polynomial& p, std::span<const Rational> matrix) {
  const std::size_t n = p.dimension();
  if (matrix.size() != n * n) throw DimensionMismatch("substitution matrix must be n x n");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row(n);
    for (std::size_t j = 0; j < n; ++j) {
      row.add_term(Monomial::unit(n, j), matrix[i * n + j]);
    }
    images.push_back(std::move(row));
  }
  Polynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    Polynomial product = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) product = product * power(images[i], m[i]);
    }
    out += product;
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
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
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace polyconf
