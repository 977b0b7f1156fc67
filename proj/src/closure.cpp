#include "polyconf/closure.hpp"

#include <functional>
#include <thread>
#include <utility>

#include "polyconf/errors.hpp"

namespace polyconf {

namespace {

using RegisterPair = std::pair<std::size_t, std::size_t>;

// Registers of a derivation. Every register is inserted into `span`, so the
// span is always the linear span of everything derived so far.
class ProofBuilder {
 public:
  ProofBuilder(std::size_t dimension, int cap, ClosureOptions options)
      : n_(dimension), span_(dimension, cap), options_(options) {}

  std::size_t dimension() const { return n_; }
  int cap() const { return span_.degree_cap(); }
  const SpanBasis& span() const { return span_; }
  const std::vector<TraceStep>& trace() const { return trace_; }
  std::size_t size() const { return trace_.size(); }
  const VectorField& field(std::size_t reg) const { return trace_.at(reg).output; }
  std::size_t bracket_count() const { return bracket_count_; }
  void count_brackets(std::size_t k = 1) { bracket_count_ += k; }

  std::size_t add_generator(std::size_t index, const VectorField& x, std::string stage) {
    return record({TraceOp::generator, std::move(stage), {index}, {}, x});
  }

  std::size_t add_bracket(std::size_t a, std::size_t b, const Rational& coefficient,
                          VectorField result, std::string stage) {
    return record({TraceOp::bracket, std::move(stage), {a, b}, {coefficient}, std::move(result)});
  }

  std::size_t add_combination(std::vector<std::size_t> inputs, std::vector<Rational> coefficients,
                              VectorField result, std::string stage) {
    return record({TraceOp::combination, std::move(stage), std::move(inputs),
                   std::move(coefficients), std::move(result)});
  }

  // [reg a, reg b] for every pair, evaluated on up to options.threads workers.
  std::vector<VectorField> brackets(const std::vector<RegisterPair>& pairs) const {
    std::vector<VectorField> out(pairs.size(), VectorField(n_));
    auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t k = first; k < pairs.size(); k += stride) {
        out[k] = lie_bracket(field(pairs[k].first), field(pairs[k].second));
      }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, options_.threads), pairs.size());
    if (workers <= 1) {
      work(0, 1);
      return out;
    }
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    }
    return out;
  }

 private:
  std::size_t record(TraceStep step) {
    span_.insert(step.output);
    trace_.push_back(std::move(step));
    return trace_.size() - 1;
  }

  std::size_t n_;
  SpanBasis span_;
  ClosureOptions options_;
  std::vector<TraceStep> trace_;
  std::size_t bracket_count_ = 0;
};

struct LocalClosure {
  SpanBasis span;
  std::vector<std::size_t> representatives;
  std::size_t brackets = 0;
  std::size_t discarded = 0;
  std::size_t rounds = 0;
};

// Round-based closure of the registers `start` inside `span`. Round r
// brackets every representative added in round r-1 with every older one, in
// (newer, older) index order. Stops at the fixed point or once the span
// reaches `target` dimensions.
LocalClosure close_registers(ProofBuilder& builder, SpanBasis span,
                             const std::vector<std::size_t>& start, const std::string& stage,
                             std::size_t target) {
  LocalClosure out{std::move(span), {}, 0, 0, 0};
  const int cap = out.span.degree_cap();
  for (auto reg : start) {
    if (builder.field(reg).degree() <= cap && out.span.insert(builder.field(reg))) {
      out.representatives.push_back(reg);
    }
  }
  std::size_t processed = 0;
  while (processed < out.representatives.size() && out.span.dimension() < target) {
    ++out.rounds;
    const std::size_t end = out.representatives.size();
    std::vector<RegisterPair> pairs;
    for (std::size_t j = processed; j < end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        pairs.emplace_back(out.representatives[i], out.representatives[j]);
      }
    }
    auto results = builder.brackets(pairs);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      ++out.brackets;
      builder.count_brackets();
      if (results[k].degree() > cap) {
        ++out.discarded;
        continue;
      }
      if (!out.span.insert(results[k])) continue;
      out.representatives.push_back(builder.add_bracket(pairs[k].first, pairs[k].second,
                                                        Rational(1), std::move(results[k]), stage));
      if (out.span.dimension() >= target) break;
    }
    processed = end;
  }
  return out;
}

// Lemma 1 reduction on register `reg`. Translations must be registers
// 0..n-1 (h*(e_i) = -d_i) and Id* register dilation_index(n).
std::size_t reduce_to_linear(ProofBuilder& builder, const Metric& m, std::size_t reg) {
  const std::size_t n = m.dimension();
  const int limit = builder.field(reg).degree() + 1;
  std::size_t current = reg;
  for (int round = 0;; ++round) {
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < n && !next; ++i) {
      builder.count_brackets();
      VectorField derivative = -lie_bracket(builder.field(i), builder.field(current));
      if (!is_conformal(derivative, m)) {
        next = builder.add_bracket(i, current, Rational(-1), std::move(derivative),
                                   "lemma1-derivative");
      }
    }
    if (!next) break;
    if (round + 1 > limit) {
      throw InternalInvariantError("lemma 1 derivative loop exceeded its iteration bound");
    }
    current = *next;
  }

  const VectorField last = builder.field(current);
  // Each factor (1 + ad(Id*)/(k-1)) kills the degree-k part, since
  // [Id*, X_j] = -(j-1) X_j, and fixes the degree-1 part.
  const std::size_t dilation = dilation_index(n);
  for (int k = 0; k <= last.degree(); ++k) {
    if (k == 1 || homogeneous_part(last, k).is_zero()) continue;
    const Rational scale = Rational(1) / (k - 1);
    builder.count_brackets();
    VectorField shifted = lie_bracket(builder.field(dilation), builder.field(current)) * scale;
    VectorField combined = builder.field(current) + shifted;
    std::size_t shifted_reg =
        builder.add_bracket(dilation, current, scale, std::move(shifted), "lemma1-projection");
    current = builder.add_combination({shifted_reg, current}, {Rational(1), Rational(1)},
                                      std::move(combined), "lemma1-projection");
  }

  const VectorField& linear = builder.field(current);
  if (linear != homogeneous_part(last, 1)) {
    throw InternalInvariantError("dilation projection did not isolate the linear part");
  }
  if (!is_conformal(last - linear, m)) {
    throw InternalInvariantError("no conformal C with X - C linear after the derivative loop");
  }
  if (is_conformal(linear, m)) {
    throw InternalInvariantError("reduced linear field is conformal");
  }
  return current;
}

std::vector<std::size_t> range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t k = first; k < last; ++k) out.push_back(k);
  return out;
}

struct QuadraticStage {
  bool saturated = false;
  std::vector<std::size_t> basis;
  WitnessCheck witness;
};

// `linear_basis` must span Vect_1; `special` are the (dx^i)* registers.
QuadraticStage saturate_quadratic(ProofBuilder& builder, const Metric& m,
                                  const std::vector<std::size_t>& linear_basis,
                                  const std::vector<std::size_t>& special) {
  const std::size_t n = m.dimension();
  QuadraticStage out;

  const VectorField y = a_star(LinearMap::unit(n, 0, 0));
  std::vector<CoordinateVector> columns;
  for (auto reg : linear_basis) columns.push_back(coordinates(builder.field(reg), 1));
  auto coefficients = solve_combination(columns, coordinates(y, 1));
  if (!coefficients) throw InternalInvariantError("Y = -x1 d1 is not in the linear span");
  const std::size_t y_reg =
      builder.add_combination(linear_basis, std::move(*coefficients), y, "quadratic-witness");
  const std::size_t z_reg = special.at(1);
  builder.count_brackets();
  VectorField w = lie_bracket(builder.field(y_reg), builder.field(z_reg));
  out.witness.y = y;
  out.witness.z = builder.field(z_reg);
  out.witness.bracket = w;
  out.witness.divergence = divergence(w);
  out.witness.nonzero = !w.is_zero();
  out.witness.divergence_free = out.witness.divergence.is_zero();
  const std::size_t w_reg =
      builder.add_bracket(y_reg, z_reg, Rational(1), std::move(w), "quadratic-witness");

  SpanBasis quadratic(n, 2);
  const std::size_t target = homogeneous_field_space_dimension(n, 2);
  for (auto reg : special) {
    if (quadratic.insert(builder.field(reg))) out.basis.push_back(reg);
  }
  if (quadratic.insert(builder.field(w_reg))) out.basis.push_back(w_reg);

  for (std::size_t idx = 0; idx < out.basis.size() && quadratic.dimension() < target; ++idx) {
    std::vector<RegisterPair> pairs;
    for (auto l : linear_basis) pairs.emplace_back(l, out.basis[idx]);
    auto results = builder.brackets(pairs);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      builder.count_brackets();
      if (!quadratic.insert(results[k])) continue;
      out.basis.push_back(builder.add_bracket(pairs[k].first, pairs[k].second, Rational(1),
                                              std::move(results[k]), "quadratic-orbit"));
      if (quadratic.dimension() == target) break;
    }
  }
  out.saturated = quadratic.dimension() == target;
  return out;
}

// Builds each stratum Vect_{k+1}, k = 2..cap-1, from brackets of the
// previous stratum's basis with the quadratic basis.
void ascend_strata(ProofBuilder& builder, const std::vector<std::size_t>& quadratic_basis) {
  const std::size_t n = builder.dimension();
  std::vector<std::size_t> current = quadratic_basis;
  for (int k = 2; k < builder.cap(); ++k) {
    SpanBasis stratum(n, k + 1);
    const std::size_t target = homogeneous_field_space_dimension(n, k + 1);
    std::vector<std::size_t> next;
    for (std::size_t idx = 0; idx < current.size() && stratum.dimension() < target; ++idx) {
      std::vector<RegisterPair> pairs;
      for (auto q : quadratic_basis) pairs.emplace_back(q, current[idx]);
      auto results = builder.brackets(pairs);
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        builder.count_brackets();
        if (!stratum.insert(results[r])) continue;
        next.push_back(builder.add_bracket(pairs[r].first, pairs[r].second, Rational(1),
                                           std::move(results[r]), "lemma2-ascent"));
        if (stratum.dimension() == target) break;
      }
    }
    if (stratum.dimension() != target) {
      throw InternalInvariantError("homogeneous stratum of degree " + std::to_string(k + 1) +
                                   " did not saturate (" + std::to_string(stratum.dimension()) +
                                   " of " + std::to_string(target) + ")");
    }
    current = std::move(next);
  }
}

void require_generators(const std::vector<VectorField>& generators, int cap) {
  if (generators.empty()) throw PreconditionError("closure needs at least one generator");
  const std::size_t n = generators.front().dimension();
  if (n < 2) {
    throw PreconditionError(
        "closure requires dimension n >= 2; for n = 1 Vect_{<=2} is already a subalgebra");
  }
  for (const auto& g : generators) {
    if (g.dimension() != n) throw DimensionMismatch("generators have mixed dimensions");
    if (g.degree() > cap) {
      throw DegreeCapExceeded("generator " + to_string(g) + " exceeds cap " + std::to_string(cap));
    }
  }
}

std::vector<VectorField> linear_monomial_fields(std::size_t n, int degree) {
  std::vector<VectorField> out;
  for (const auto& mono : monomials_of_degree(n, degree)) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(VectorField::monomial_field(Rational(1), mono, i));
    }
  }
  return out;
}

bool contains_stratum(const SpanBasis& s, int degree) {
  if (s.degree_cap() < degree) return false;
  for (const auto& f : linear_monomial_fields(s.ambient_dimension(), degree)) {
    if (!s.contains(f)) return false;
  }
  return true;
}

std::string dims_detail(std::size_t have, std::size_t want) {
  return std::to_string(have) + "/" + std::to_string(want);
}

}  // namespace

std::string_view to_string(TraceOp op) {
  switch (op) {
    case TraceOp::generator:
      return "generator";
    case TraceOp::bracket:
      return "bracket";
    case TraceOp::combination:
      return "combination";
  }
  return "unknown";
}

ClosureReport lie_closure(const std::vector<VectorField>& generators, int cap,
                          const ClosureOptions& options) {
  require_generators(generators, cap);
  const std::size_t n = generators.front().dimension();
  ProofBuilder builder(n, cap, options);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    builder.add_generator(g, generators[g], "generator");
  }
  auto local = close_registers(builder, SpanBasis(n, cap), range(0, generators.size()), "closure",
                               field_space_dimension(n, cap));
  ClosureReport report{generators, cap, local.span, {}, false, local.brackets, local.discarded,
                       local.rounds};
  for (auto reg : local.representatives) report.representatives.push_back(builder.field(reg));
  report.saturated = report.final_span.is_full();
  return report;
}

VectorField lemma1_reduce(const VectorField& x, const Metric& m) {
  const std::size_t n = m.dimension();
  if (x.dimension() != n) throw DimensionMismatch("field dimension does not match signature");
  if (is_conformal(x, m)) throw PreconditionError("field is conformal; nothing to reduce");
  ProofBuilder builder(n, std::max(x.degree(), 2), {});
  auto basis = so_conformal_basis(m);
  for (std::size_t g = 0; g < basis.size(); ++g) builder.add_generator(g, basis[g], "generator");
  const std::size_t seed = builder.add_generator(basis.size(), x, "generator");
  return builder.field(reduce_to_linear(builder, m, seed));
}

SpanBasis generate_linear(const VectorField& linear_field, const Metric& m,
                          const ClosureOptions& options) {
  const std::size_t n = m.dimension();
  if (linear_field.dimension() != n) {
    throw DimensionMismatch("field dimension does not match signature");
  }
  if (linear_field.is_zero() || !linear_field.is_homogeneous(1) || is_conformal(linear_field, m)) {
    throw PreconditionError("expected a linear field outside (so(p,q) + R Id)*, got " +
                            to_string(linear_field));
  }
  ProofBuilder builder(n, 1, options);
  std::size_t g = 0;
  for (const auto& rotation : so_pq_basis(m)) builder.add_generator(g++, a_star(rotation), "generator");
  builder.add_generator(g++, a_star(LinearMap::identity(n)), "generator");
  builder.add_generator(g++, linear_field, "generator");
  return close_registers(builder, SpanBasis(n, 1), range(0, g), "linear-saturation", n * n).span;
}

SpanBasis generate_quadratic(const SpanBasis& linear_span, const Metric& m,
                             const ClosureOptions& options) {
  const std::size_t n = m.dimension();
  if (linear_span.ambient_dimension() != n) {
    throw DimensionMismatch("span dimension does not match signature");
  }
  if (!contains_stratum(linear_span, 1)) {
    throw PreconditionError("linear span does not contain every linear field");
  }
  const int cap = std::max(2, linear_span.degree_cap());
  ProofBuilder builder(n, cap, options);
  std::size_t g = 0;
  std::vector<std::size_t> linear;
  for (const auto& f : linear_monomial_fields(n, 1)) linear.push_back(builder.add_generator(g++, f, "generator"));
  std::vector<std::size_t> special;
  for (std::size_t i = 0; i < n; ++i) {
    special.push_back(builder.add_generator(g++, alpha_star(Covector::unit(n, i), m), "generator"));
  }
  auto stage = saturate_quadratic(builder, m, linear, special);
  if (!stage.saturated) throw InternalInvariantError("quadratic stratum did not saturate");
  SpanBasis out = builder.span();
  for (const auto& f : linear_span.basis_fields()) out.insert(f);
  return out;
}

SpanBasis lemma2_ascend(const SpanBasis& base, int cap, const ClosureOptions& options) {
  const std::size_t n = base.ambient_dimension();
  if (n < 2) {
    throw PreconditionError("stratum ascent requires n >= 2; Vect_{<=2}(R) is a subalgebra");
  }
  if (cap < 2 || base.degree_cap() > cap) {
    throw PreconditionError("ascent cap must be at least 2 and at least the base cap");
  }
  for (int k = 0; k <= 2; ++k) {
    if (!contains_stratum(base, k)) throw PreconditionError("base does not contain Vect_{<=2}");
  }
  ProofBuilder builder(n, cap, options);
  std::size_t g = 0;
  std::vector<std::size_t> quadratic;
  for (const auto& f : linear_monomial_fields(n, 2)) quadratic.push_back(builder.add_generator(g++, f, "generator"));
  ascend_strata(builder, quadratic);
  SpanBasis out = builder.span();
  for (const auto& f : base.basis_fields()) out.insert(f);
  return out;
}

MaximalityReport verify_maximality(const Metric& m, const VectorField& seed, int cap,
                                   const ClosureOptions& options) {
  const std::size_t n = m.dimension();
  if (seed.dimension() != n) throw DimensionMismatch("seed dimension does not match signature");
  if (cap < 2) throw PreconditionError("maximality verification needs cap >= 2");
  if (seed.degree() > cap) {
    throw DegreeCapExceeded("seed of degree " + std::to_string(seed.degree()) + " exceeds cap " +
                            std::to_string(cap));
  }
  if (is_conformal(seed, m)) throw PreconditionError("seed lies in the subalgebra");

  MaximalityReport report;
  report.subject = "verify";
  report.signature = m;
  report.seed = seed;
  report.cap = cap;
  report.target_dimension = field_space_dimension(n, cap);
  report.generators = so_conformal_basis(m);
  report.generators.push_back(seed);

  ProofBuilder builder(n, cap, options);
  for (std::size_t g = 0; g < report.generators.size(); ++g) {
    builder.add_generator(g, report.generators[g], "generator");
  }
  const std::size_t rotations_begin = n;
  const std::size_t dilation = dilation_index(n);
  const std::size_t seed_reg = report.generators.size() - 1;

  const std::size_t linear_reg = reduce_to_linear(builder, m, seed_reg);
  report.reduced_linear = builder.field(linear_reg);
  report.stages.push_back({"lemma1-reduction", true, builder.span().dimension(),
                           "L = " + to_string(builder.field(linear_reg))});

  auto finish_generic = [&](const std::string& why) {
    auto local = close_registers(builder, SpanBasis(n, cap), range(0, builder.size()),
                                 "generic-closure", report.target_dimension);
    report.stages.push_back({"generic-closure", local.span.is_full(), builder.span().dimension(),
                             why + "; closure reached " +
                                 dims_detail(local.span.dimension(), report.target_dimension)});
  };

  std::vector<std::size_t> linear_start = range(rotations_begin, dilation + 1);
  linear_start.push_back(linear_reg);
  auto linear = close_registers(builder, SpanBasis(n, 1), linear_start, "linear-saturation", n * n);
  const bool linear_ok = linear.span.dimension() == n * n;
  report.stages.push_back({"linear-saturation", linear_ok, builder.span().dimension(),
                           "Vect_1 " + dims_detail(linear.span.dimension(), n * n)});

  if (!linear_ok) {
    finish_generic("linear stage did not saturate");
  } else {
    auto quadratic = saturate_quadratic(builder, m, linear.representatives,
                                        range(dilation + 1, dilation + 1 + n));
    report.witness = quadratic.witness;
    const std::size_t quadratic_target = homogeneous_field_space_dimension(n, 2);
    report.stages.push_back({"quadratic-saturation", quadratic.saturated,
                             builder.span().dimension(),
                             "Vect_2 " + dims_detail(quadratic.basis.size(), quadratic_target)});
    if (!quadratic.saturated) {
      finish_generic("quadratic stage did not saturate");
    } else {
      ascend_strata(builder, quadratic.basis);
      report.stages.push_back({"lemma2-ascent", true, builder.span().dimension(),
                               "Vect_{<=" + std::to_string(cap) + "} " +
                                   dims_detail(builder.span().dimension(),
                                               report.target_dimension)});
    }
  }

  report.final_span = builder.span();
  report.verdict = report.final_span.is_full();
  report.bracket_count = builder.bracket_count();
  report.witness_trace = builder.trace();
  return report;
}

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::so31_in_holomorphic:
      return "so31-in-holomorphic";
    case Scenario::so22_in_product_sl2:
      return "so22-in-product-sl2";
    case Scenario::product_sl2_in_product:
      return "product-sl2-in-product";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view id) {
  for (auto s : {Scenario::so31_in_holomorphic, Scenario::so22_in_product_sl2,
                 Scenario::product_sl2_in_product}) {
    if (to_string(s) == id) return s;
  }
  throw PreconditionError("unknown scenario '" + std::string(id) + "'");
}

namespace {

struct ScenarioSetup {
  Metric signature;
  std::vector<VectorField> base;
  VectorField default_seed;
  LinearConstraints constraints;
  std::function<bool(const VectorField&)> member;
};

// u^k d_axis in lightcone coordinates, pulled back to x-coordinates.
VectorField lightcone_monomial(unsigned power, std::size_t axis) {
  std::vector<unsigned> e(2, 0);
  e[axis] = power;
  return lightcone_inverse(VectorField::monomial_field(Rational(1), Monomial(std::move(e)), axis));
}

ScenarioSetup scenario_setup(Scenario scenario, int cap) {
  switch (scenario) {
    case Scenario::so31_in_holomorphic: {
      Metric m(2, 0);
      // Re(z^3) d1 + Im(z^3) d2
      VectorField z_cubed(2);
      z_cubed.component(0).add_term(Monomial{3, 0}, Rational(1));
      z_cubed.component(0).add_term(Monomial{1, 2}, Rational(-3));
      z_cubed.component(1).add_term(Monomial{2, 1}, Rational(3));
      z_cubed.component(1).add_term(Monomial{0, 3}, Rational(-1));
      auto constraints = [](const VectorField& x) {
        return std::vector<Polynomial>{partial(x[0], 0) - partial(x[1], 1),
                                       partial(x[0], 1) + partial(x[1], 0)};
      };
      return {m, so_conformal_basis(m), z_cubed, constraints, holomorphic_check};
    }
    case Scenario::so22_in_product_sl2: {
      Metric m(1, 1);
      auto constraints = [cap](const VectorField& x) {
        VectorField u = lightcone_transform(x);
        std::vector<Polynomial> out{partial(u[0], 1), partial(u[1], 0)};
        for (int k = 3; k <= cap; ++k) out.push_back(homogeneous_part(u[1], k));
        return out;
      };
      auto member = [](const VectorField& x) {
        VectorField u = lightcone_transform(x);
        return product_form_check(u) && u[1].degree() <= 2;
      };
      return {m, so_conformal_basis(m), lightcone_monomial(3, 0), constraints, member};
    }
    case Scenario::product_sl2_in_product: {
      Metric m(1, 1);
      std::vector<VectorField> base;
      for (int k = 0; k <= cap; ++k) base.push_back(lightcone_monomial(static_cast<unsigned>(k), 0));
      for (unsigned k = 0; k <= 2; ++k) base.push_back(lightcone_monomial(k, 1));
      auto constraints = [](const VectorField& x) {
        VectorField u = lightcone_transform(x);
        return std::vector<Polynomial>{partial(u[0], 1), partial(u[1], 0)};
      };
      auto member = [](const VectorField& x) { return product_form_check(lightcone_transform(x)); };
      return {m, std::move(base), lightcone_monomial(3, 1), constraints, member};
    }
  }
  throw PreconditionError("unknown scenario");
}

}  // namespace

std::vector<VectorField> scenario_ambient_basis(Scenario scenario, int cap) {
  if (cap < 3) throw PreconditionError("scenario checks need cap >= 3");
  return solution_space(2, cap, scenario_setup(scenario, cap).constraints);
}

MaximalityReport scenario_n2_chain(Scenario scenario, int cap,
                                   const std::optional<VectorField>& seed,
                                   const ClosureOptions& options) {
  if (cap < 3) throw PreconditionError("scenario checks need cap >= 3");
  auto setup = scenario_setup(scenario, cap);
  const VectorField chosen = seed.value_or(setup.default_seed);
  if (chosen.dimension() != 2) throw DimensionMismatch("scenario seeds live in dimension 2");
  if (chosen.degree() > cap) throw DegreeCapExceeded("seed exceeds the scenario cap");
  if (!setup.member(chosen)) throw PreconditionError("seed outside ambient subalgebra");
  SpanBasis base_span(2, cap);
  for (const auto& f : setup.base) {
    if (!setup.member(f)) throw InternalInvariantError("scenario base leaves the ambient subalgebra");
    base_span.insert(f);
  }
  if (base_span.contains(chosen)) throw PreconditionError("seed lies in the subalgebra");

  MaximalityReport report;
  report.subject = std::string(to_string(scenario));
  report.signature = setup.signature;
  report.seed = chosen;
  report.cap = cap;
  report.generators = setup.base;
  report.generators.push_back(chosen);
  report.target_dimension = solution_space(2, cap, setup.constraints).size();

  ProofBuilder builder(2, cap, options);
  for (std::size_t g = 0; g < report.generators.size(); ++g) {
    builder.add_generator(g, report.generators[g], "generator");
  }
  auto local = close_registers(builder, SpanBasis(2, cap), range(0, builder.size()),
                               "ambient-closure", report.target_dimension);
  bool inside = true;
  for (std::size_t reg = 0; reg < builder.size(); ++reg) inside = inside && setup.member(builder.field(reg));
  const bool saturated = local.span.dimension() == report.target_dimension;
  report.stages.push_back({"ambient-closure", saturated && inside, builder.span().dimension(),
                           "ambient " + dims_detail(local.span.dimension(), report.target_dimension) +
                               (inside ? "" : "; closure left the ambient subalgebra")});
  report.final_span = builder.span();
  report.verdict = saturated && inside;
  report.bracket_count = builder.bracket_count();
  report.witness_trace = builder.trace();
  return report;
}

ReplayResult replay_witness(const MaximalityReport& report) {
  const auto& steps = report.witness_trace;
  auto fail = [](std::size_t k, const std::string& what) {
    return ReplayResult{false, "step " + std::to_string(k) + ": " + what};
  };
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    for (auto in : step.inputs) {
      if (step.op != TraceOp::generator && in >= k) return fail(k, "refers to a later register");
    }
    switch (step.op) {
      case TraceOp::generator:
        if (step.inputs.size() != 1 || step.inputs[0] >= report.generators.size() ||
            report.generators[step.inputs[0]] != step.output) {
          return fail(k, "generator does not match the report's generators");
        }
        break;
      case TraceOp::bracket: {
        if (step.inputs.size() != 2 || step.coefficients.size() != 1) {
          return fail(k, "malformed bracket");
        }
        VectorField expected =
            lie_bracket(steps[step.inputs[0]].output, steps[step.inputs[1]].output) *
            step.coefficients[0];
        if (expected != step.output) return fail(k, "bracket output differs");
        break;
      }
      case TraceOp::combination: {
        if (step.inputs.size() != step.coefficients.size() || step.inputs.empty()) {
          return fail(k, "malformed combination");
        }
        VectorField expected(step.output.dimension());
        for (std::size_t i = 0; i < step.inputs.size(); ++i) {
          expected += steps[step.inputs[i]].output * step.coefficients[i];
        }
        if (expected != step.output) return fail(k, "combination output differs");
        break;
      }
    }
  }
  SpanBasis rebuilt(report.final_span.ambient_dimension(), report.final_span.degree_cap());
  for (const auto& step : steps) rebuilt.insert(step.output);
  if (!(rebuilt == report.final_span)) {
    return {false, "span of the replayed registers differs from the reported span"};
  }
  return {true, "replayed " + std::to_string(steps.size()) + " steps"};
}

}  // namespace polyconf
