#pragma once

// Shared generators and test-only oracles. Nothing here calls into the
// span or closure engines, so it can check them independently.

#include <cstdint>
#include <random>
#include <vector>

#include "polyconf/conformal.hpp"
#include "polyconf/field_text.hpp"
#include "polyconf/vector_field.hpp"

namespace polyconf::testing {

inline VectorField field(const char* text, std::size_t n) { return parse_field(text, n); }
inline Polynomial poly(const char* text, std::size_t n) { return parse_polynomial(text, n); }

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  // Small rationals, zero with probability `zero`.
  Rational rational(double zero = 0.0) {
    if (chance(zero)) return 0;
    int num = integer(-6, 6);
    if (num == 0) num = 1;
    Rational r(num, integer(1, 4));
    r.canonicalize();
    return r;
  }

  Polynomial polynomial(std::size_t n, int max_degree, double density = 0.4) {
    Polynomial p(n);
    for (const auto& m : monomials_up_to(n, max_degree)) {
      if (chance(density)) p.add_term(m, rational());
    }
    return p;
  }

  VectorField field(std::size_t n, int max_degree, double density = 0.35) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(polynomial(n, max_degree, density));
    return VectorField(std::move(c));
  }

  // Homogeneous field of exactly the given degree (may be zero).
  VectorField homogeneous(std::size_t n, int degree, double density = 0.5) {
    return homogeneous_part(field(n, degree, density), degree);
  }

  LinearMap matrix(std::size_t n) {
    LinearMap a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rational(0.3);
    }
    return a;
  }

  Covector covector(std::size_t n) {
    Covector c{std::vector<Rational>(n)};
    for (auto& e : c.entries) e = rational(0.2);
    return c;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Every signature (p, q) with p + q = n.
inline std::vector<Metric> signatures(std::size_t n) {
  std::vector<Metric> out;
  for (std::size_t p = n + 1; p-- > 0;) out.emplace_back(p, n - p);
  return out;
}

// Definition-level check: L_X g = f g for a polynomial f, straight from
// the Lie-derivative matrix.
inline bool lie_derivative_is_multiple_of_metric(const VectorField& x, const Metric& m) {
  auto l = lie_derivative_metric(x, m);
  const std::size_t n = m.dimension();
  const Polynomial f = l[0][0] * Rational(m.sign(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial expected = i == j ? f * Rational(m.sign(i)) : Polynomial(n);
      if (l[i][j] != expected) return false;
    }
  }
  return true;
}

// Naive Gaussian rank over coordinate vectors; independent of SpanBasis.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t naive_rank(const std::vector<VectorField>& fields, int cap) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) rows.push_back(coordinates(f, cap));
  return naive_rank(std::move(rows));
}

// Brute-force truncated closure: bracket every pair of the current list,
// keep results within the cap, repeat until the rank stops growing.
inline std::size_t brute_force_closure_dimension(std::vector<VectorField> fields, int cap) {
  std::size_t rank = naive_rank(fields, cap);
  for (;;) {
    std::vector<VectorField> grown = fields;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      for (std::size_t j = i + 1; j < fields.size(); ++j) {
        VectorField w = lie_bracket(fields[i], fields[j]);
        if (!w.is_zero() && w.degree() <= cap) grown.push_back(std::move(w));
      }
    }
    // keep an independent subset to bound the growth
    std::vector<VectorField> kept;
    std::size_t r = 0;
    for (auto& f : grown) {
      kept.push_back(f);
      std::size_t nr = naive_rank(kept, cap);
      if (nr == r) kept.pop_back();
      else r = nr;
    }
    if (r == rank) return rank;
    rank = r;
    fields = std::move(kept);
  }
}

}  // namespace polyconf::testing
