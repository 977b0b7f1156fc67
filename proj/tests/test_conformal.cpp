#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyconf/conformal.hpp"
#include "polyconf/errors.hpp"
#include "polyconf/span.hpp"
#include "support.hpp"

using namespace polyconf;
using polyconf::testing::field;
using polyconf::testing::poly;
using polyconf::testing::Random;
using polyconf::testing::signatures;

namespace {

PolynomialMatrix diagonal(std::size_t n, std::initializer_list<int> d) {
  PolynomialMatrix out(n, std::vector<Polynomial>(n, Polynomial(n)));
  std::size_t i = 0;
  for (int v : d) {
    out[i][i] = Polynomial::constant(n, v);
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("metric") {
  Metric m(2, 1);
  CHECK(m.dimension() == 3);
  CHECK(m.sign(1) == 1);
  CHECK(m.sign(2) == -1);
  CHECK_THROWS_AS(Metric(1, 0), PreconditionError);
}

TEST_CASE("lie_derivative_metric") {
  CHECK(lie_derivative_metric(VectorField::euler(2), Metric(1, 1)) == diagonal(2, {2, -2}));
  CHECK(lie_derivative_metric(VectorField::euler(3), Metric(3, 0)) == diagonal(3, {2, 2, 2}));
  CHECK(lie_derivative_metric(field("x2 d1 + x1 d2", 2), Metric(1, 1)) == diagonal(2, {0, 0}));
  CHECK(lie_derivative_metric(field("x2 d2", 2), Metric(2, 0)) == diagonal(2, {0, 2}));
  auto l = lie_derivative_metric(field("x1^2 d1 - x2^2 d1 + 2 x1 x2 d2", 2), Metric(2, 0));
  CHECK(l[0][0] == poly("4 x1", 2));
  CHECK(l[1][1] == poly("4 x1", 2));
  CHECK(l[0][1].is_zero());
}

TEST_CASE("conformal_check") {
  auto euler = conformal_check(VectorField::euler(2), Metric(1, 1));
  CHECK(euler.is_conformal);
  REQUIRE(euler.factor);
  CHECK(*euler.factor == poly("2", 2));
  auto z2 = conformal_check(field("x1^2 d1 - x2^2 d1 + 2 x1 x2 d2", 2), Metric(2, 0));
  CHECK(z2.is_conformal);
  CHECK(*z2.factor == poly("4 x1", 2));
  auto bad = conformal_check(field("x1^2 d2", 2), Metric(2, 0));
  CHECK_FALSE(bad.is_conformal);
  CHECK_FALSE(bad.factor);
  CHECK_THROWS_AS(conformal_check(field("d1", 3), Metric(2, 0)), DimensionMismatch);
}

TEST_CASE("generator formulas") {
  CHECK(h_star({1, 0}) == field("-d1", 2));
  CHECK(h_star({0, 0}).is_zero());
  CHECK(h_star({1, 1}) == field("-d1 - d2", 2));
  CHECK(a_star(LinearMap::identity(3)) == -VectorField::euler(3));
  CHECK(a_star(LinearMap::unit(2, 0, 0)) == field("-x1 d1", 2));
  CHECK(a_star(LinearMap(2)).is_zero());
  CHECK(alpha_star(Covector::unit(2, 1), Metric(2, 0)) ==
        field("x1 x2 d1 + 1/2 x2^2 d2 - 1/2 x1^2 d2", 2));
  CHECK(alpha_star(Covector::unit(2, 0), Metric(2, 0)) ==
        field("1/2 x1^2 d1 - 1/2 x2^2 d1 + x1 x2 d2", 2));
  CHECK(alpha_star(Covector{{0, 0}}, Metric(1, 1)).is_zero());
  // (1,1): Q = x1^2 - x2^2, dx^2 sharp = -d2
  CHECK(alpha_star(Covector::unit(2, 1), Metric(1, 1)) ==
        field("x1 x2 d1 + 1/2 x1^2 d2 + 1/2 x2^2 d2", 2));
}

TEST_CASE("a_star is a Lie algebra homomorphism") {
  Random rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto a = rng.matrix(n), b = rng.matrix(n);
    CHECK(lie_bracket(a_star(a), a_star(b)) == a_star(commutator(a, b)));
    CHECK(linear_map_of(a_star(a)) == a);
  }
}

TEST_CASE("div alpha* = n alpha(x)") {
  Random rng(32);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& m : signatures(n)) {
      for (int trial = 0; trial < 3; ++trial) {
        auto alpha = rng.covector(n);
        CHECK(divergence(alpha_star(alpha, m)) == Rational(n) * alpha.evaluate());
      }
    }
  }
}

TEST_CASE("so(p,q) and conformal bases") {
  CHECK(so_pq_basis(Metric(2, 2)).size() == 6);
  CHECK(so_pq_basis(Metric(1, 1)).size() == 1);
  CHECK(so_conformal_basis(Metric(2, 0)).size() == 6);
  CHECK(so_conformal_basis(Metric(2, 1)).size() == 10);
  CHECK(so_conformal_basis(Metric(3, 1)).size() == 15);
  CHECK(so_conformal_basis(Metric(2, 0))[dilation_index(2)] == -VectorField::euler(2));
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& m : signatures(n)) {
      for (const auto& a : so_pq_basis(m)) {
        // M^T g + g M = 0
        CHECK(g_conjugate(a, m) == -1 * a);
      }
      auto basis = so_conformal_basis(m);
      CHECK(testing::naive_rank(basis, 2) == basis.size());
      SpanBasis span(n, 2);
      for (const auto& x : basis) {
        CHECK(is_conformal(x, m));
        CHECK(testing::lie_derivative_is_multiple_of_metric(x, m));
        span.insert(x);
      }
      for (const auto& x : basis) {
        for (const auto& y : basis) CHECK(span.contains(lie_bracket(x, y)));
      }
    }
  }
}

TEST_CASE("decompose_gl") {
  const std::size_t n = 2;
  auto e12 = LinearMap::unit(n, 0, 1), e21 = LinearMap::unit(n, 1, 0);
  auto id = decompose_gl(LinearMap::identity(n), Metric(2, 0));
  CHECK(id.scalar == LinearMap::identity(n));
  CHECK(id.skew.is_zero());
  CHECK(id.selfconjugate.is_zero());
  auto eu = decompose_gl(e12, Metric(2, 0));
  CHECK(eu.scalar.is_zero());
  CHECK(eu.skew == Rational(1, 2) * (e12 - e21));
  CHECK(eu.selfconjugate == Rational(1, 2) * (e12 + e21));
  auto lo = decompose_gl(e12, Metric(1, 1));
  CHECK(lo.skew == Rational(1, 2) * (e12 + e21));
  CHECK(lo.selfconjugate == Rational(1, 2) * (e12 - e21));

  Random rng(33);
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    for (const auto& m : signatures(dim)) {
      for (int trial = 0; trial < 5; ++trial) {
        auto a = rng.matrix(dim);
        auto d = decompose_gl(a, m);
        CHECK(d.scalar + d.skew + d.selfconjugate == a);
        CHECK(g_conjugate(d.skew, m) == -1 * d.skew);
        CHECK(g_conjugate(d.selfconjugate, m) == d.selfconjugate);
        CHECK(d.selfconjugate.trace() == 0);
        CHECK(d.scalar == (a.trace() / Rational(dim)) * LinearMap::identity(dim));
      }
      // dimensions of the pieces: 1, n(n-1)/2, n(n+1)/2 - 1
      std::vector<std::vector<Rational>> skew, self;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          auto d = decompose_gl(LinearMap::unit(dim, i, j), m);
          std::vector<Rational> s, t;
          for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
              s.push_back(d.skew(r, c));
              t.push_back(d.selfconjugate(r, c));
            }
          }
          skew.push_back(s);
          self.push_back(t);
        }
      }
      CHECK(testing::naive_rank(skew) == dim * (dim - 1) / 2);
      CHECK(testing::naive_rank(self) == dim * (dim + 1) / 2 - 1);
    }
  }
}

TEST_CASE("quadratic_split") {
  auto s = quadratic_split(field("x1^2 d1", 2), Metric(2, 0));
  CHECK(s.conformal == field("1/2 x1^2 d1 - 1/2 x2^2 d1 + x1 x2 d2", 2));
  CHECK(s.divergence_free == field("1/2 x1^2 d1 + 1/2 x2^2 d1 - x1 x2 d2", 2));
  auto a1 = alpha_star(Covector::unit(2, 0), Metric(2, 0));
  auto t = quadratic_split(a1, Metric(2, 0));
  CHECK(t.conformal == a1);
  CHECK(t.divergence_free.is_zero());
  auto u = quadratic_split(field("x1^2 d2", 2), Metric(2, 0));
  CHECK(u.conformal.is_zero());
  CHECK(u.divergence_free == field("x1^2 d2", 2));

  Random rng(34);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& m : signatures(n)) {
      auto x = rng.homogeneous(n, 2);
      auto sp = quadratic_split(x, m);
      CHECK(sp.conformal + sp.divergence_free == x);
      CHECK(is_conformal(sp.conformal, m));
      CHECK(divergence(sp.divergence_free).is_zero());
    }
  }
}

TEST_CASE("holomorphic_check") {
  CHECK(holomorphic_check(field("x1^2 d1 - x2^2 d1 + 2 x1 x2 d2", 2)));
  CHECK_FALSE(holomorphic_check(field("x1 d1", 2)));
  CHECK(holomorphic_check(VectorField(2)));
}

TEST_CASE("lightcone") {
  CHECK(lightcone_transform(field("x2 d1 + x1 d2", 2)) == field("x1 d1 - x2 d2", 2));
  CHECK(lightcone_transform(VectorField::euler(2)) == VectorField::euler(2));
  CHECK(product_form_check(field("x1 d1 - x2 d2", 2)));
  CHECK(product_form_check(field("x1^3 d1", 2)));
  CHECK_FALSE(product_form_check(field("x2 d1", 2)));
  // applying the transform twice gives X(2v)/2, not X
  auto x = field("x1^3 d1 + x1 x2 d2", 2);
  CHECK(lightcone_transform(lightcone_transform(x)) == field("4 x1^3 d1 + 2 x1 x2 d2", 2));

  Random rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rng.field(2, 3);
    CHECK(lightcone_inverse(lightcone_transform(f)) == f);
    CHECK(lightcone_transform(lightcone_inverse(f)) == f);
    // the change of coordinates is linear, so brackets are preserved
    auto g = rng.field(2, 3);
    CHECK(lightcone_transform(lie_bracket(f, g)) ==
          lie_bracket(lightcone_transform(f), lightcone_transform(g)));
  }
}

TEST_CASE("n = 2 predicates agree with the conformal check") {
  Random rng(36);
  int conformal_hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    VectorField x = rng.field(2, 3);
    // mix in conformal examples so both outcomes are exercised
    if (trial % 2 == 0) {
      auto holo = field("x1^3 d1 - 3 x1 x2^2 d1 + 3 x1^2 x2 d2 - x2^3 d2", 2);
      x = rng.rational() * holo + rng.rational() * field("x1 d1 + x2 d2", 2);
      auto prod = lightcone_inverse(field("x1^3 d1 + x2^2 d2 + 2 d1", 2));
      if (trial % 4 == 0) x = prod;
    }
    const bool holo = holomorphic_check(x);
    CHECK(is_conformal(x, Metric(2, 0)) == holo);
    CHECK(is_conformal(x, Metric(1, 1)) == product_form_check(lightcone_transform(x)));
    conformal_hits += holo ? 1 : 0;
  }
  CHECK(conformal_hits > 10);
}

TEST_CASE("conformal check agrees with the Lie-derivative definition") {
  Random rng(37);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& m : signatures(n)) {
      auto basis = so_conformal_basis(m);
      for (int trial = 0; trial < 10; ++trial) {
        VectorField x = rng.field(n, 2, 0.15);
        if (trial % 2 == 0) {
          x = VectorField(n);
          for (const auto& b : basis) x += rng.rational(0.5) * b;
        }
        CHECK(is_conformal(x, m) == testing::lie_derivative_is_multiple_of_metric(x, m));
      }
    }
  }
}

TEST_CASE("conformal solution census") {
  CHECK(conformal_solution_space(Metric(3, 0), 4).size() == 10);
  CHECK(conformal_solution_space(Metric(2, 1), 4).size() == 10);
  CHECK(conformal_solution_space(Metric(4, 0), 3).size() == 15);
  CHECK(conformal_solution_space(Metric(2, 2), 2).size() == 15);
  for (int d = 1; d <= 5; ++d) {
    CHECK(conformal_solution_space(Metric(2, 0), d).size() == std::size_t(2 * (d + 1)));
    CHECK(conformal_solution_space(Metric(1, 1), d).size() == std::size_t(2 * (d + 1)));
  }
}

TEST_CASE("conformal_linear_split") {
  auto a1 = alpha_star(Covector::unit(2, 0), Metric(2, 0));
  auto c = conformal_linear_split(a1 + field("x2 d2 + d1", 2), Metric(2, 0));
  REQUIRE(c);
  CHECK(is_conformal(*c, Metric(2, 0)));
  CHECK((a1 + field("x2 d2 + d1", 2) - *c).degree() <= 1);
  CHECK_FALSE(conformal_linear_split(field("x1^2 d2", 2), Metric(2, 0)));
}
