#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyconf/conformal.hpp"
#include "polyconf/span.hpp"

namespace polyconf {

struct ClosureOptions {
  // Workers used to evaluate a batch of brackets. Insertion is always
  // sequential in canonical order, so results do not depend on this.
  unsigned threads = 1;
};

// Truncated Lie closure <S> ∩ Vect_{<=cap}. Brackets above the cap are
// discarded, so final_span is a lower bound of the true closure and
// `saturated` is a sound certificate that <S> contains Vect_{<=cap}.
struct ClosureReport {
  std::vector<VectorField> generators;
  int degree_cap = 0;
  SpanBasis final_span;
  // Fields that grew the span, in insertion order.
  std::vector<VectorField> representatives;
  bool saturated = false;
  std::size_t bracket_count = 0;
  std::size_t discarded_count = 0;
  std::size_t rounds = 0;
};

ClosureReport lie_closure(const std::vector<VectorField>& generators, int cap,
                          const ClosureOptions& options = {});

enum class TraceOp { generator, bracket, combination };

// One register of a replayable derivation. Register k is the output of step k.
//   generator:   output = generators[inputs[0]]
//   bracket:     output = coefficients[0] * [reg inputs[0], reg inputs[1]]
//   combination: output = sum_k coefficients[k] * reg inputs[k]
struct TraceStep {
  TraceOp op = TraceOp::generator;
  std::string stage;
  std::vector<std::size_t> inputs;
  std::vector<Rational> coefficients;
  VectorField output{1};
};

std::string_view to_string(TraceOp op);

struct StageOutcome {
  std::string name;
  bool completed = false;
  // Dimension of the generated span after the stage.
  std::size_t dimension = 0;
  std::string detail;
};

// Y = (E_11)* = -x1 d1, Z = (dx^2)*, W = [Y, Z].
struct WitnessCheck {
  VectorField y{1};
  VectorField z{1};
  VectorField bracket{1};
  Polynomial divergence{1};
  bool nonzero = false;
  bool divergence_free = false;
};

struct MaximalityReport {
  std::string subject;
  Metric signature{2, 0};
  VectorField seed{1};
  int cap = 0;
  std::vector<VectorField> generators;
  std::vector<StageOutcome> stages;
  // Dimension the closure has to reach: all of Vect_{<=cap}, or the
  // scenario's ambient subalgebra.
  std::size_t target_dimension = 0;
  SpanBasis final_span{1, 0};
  bool verdict = false;
  std::size_t bracket_count = 0;
  std::optional<VectorField> reduced_linear;
  std::optional<WitnessCheck> witness;
  std::vector<TraceStep> witness_trace;
};

// Follows [d_i, X] while some derivative is non-conformal, then strips the
// homogeneous parts of degree != 1 (all conformal by Lemma 1). Returns the
// resulting linear field, which is not conformal.
VectorField lemma1_reduce(const VectorField& x, const Metric& m);

// Bracket closure of so(p,q)*, Id* and L inside Vect_1 (cap-1 span of
// linear fields). Saturated when its dimension is n^2.
SpanBasis generate_linear(const VectorField& linear_field, const Metric& m,
                          const ClosureOptions& options = {});

// Starting from Vect_1 ⊆ linear_span, adds the (dx^i)* and W = [Y, Z], then
// brackets W's orbit with linear fields until Vect_2 saturates. Returns a
// cap-2 span.
SpanBasis generate_quadratic(const SpanBasis& linear_span, const Metric& m,
                             const ClosureOptions& options = {});

// Raises Vect_{<=2} ⊆ base to Vect_{<=cap} stratum by stratum, bracketing
// degree-k fields with quadratic ones. Throws InternalInvariantError if a
// stratum fails to saturate.
SpanBasis lemma2_ascend(const SpanBasis& base, int cap, const ClosureOptions& options = {});

// Runs the Lemma 1 reduction, linear saturation, quadratic saturation and
// stratum ascent inside the algebra generated by so_conformal_basis(m) and
// the seed. Throws PreconditionError("seed lies in the subalgebra") for a
// conformal seed.
MaximalityReport verify_maximality(const Metric& m, const VectorField& seed, int cap,
                                   const ClosureOptions& options = {});

enum class Scenario { so31_in_holomorphic, so22_in_product_sl2, product_sl2_in_product };

std::string_view to_string(Scenario scenario);
// Throws PreconditionError for an unknown id.
Scenario parse_scenario(std::string_view id);

// Closure of a base subalgebra plus one seed inside an n = 2 ambient
// subalgebra; verdict true iff it saturates the ambient space at the cap.
//   so31-in-holomorphic:    so(3,1) inside holomorphic polynomial fields
//   so22-in-product-sl2:    so(2,2) inside U1(u1) d1 + U2(u2) d2, deg U2 <= 2
//   product-sl2-in-product: that algebra inside all U1(u1) d1 + U2(u2) d2
// Without an explicit seed a default non-member of the base is used.
MaximalityReport scenario_n2_chain(Scenario scenario, int cap,
                                   const std::optional<VectorField>& seed = std::nullopt,
                                   const ClosureOptions& options = {});

// Ambient space of a scenario at the cap, as a basis of fields.
std::vector<VectorField> scenario_ambient_basis(Scenario scenario, int cap);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

// Recomputes every trace step from the generators and checks that the span
// of all registers is exactly the reported final span.
ReplayResult replay_witness(const MaximalityReport& report);

}  // namespace polyconf
