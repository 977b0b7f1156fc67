#include "polyconf/report_json.hpp"

namespace polyconf {

namespace {

Json field_list(const std::vector<VectorField>& fields) {
  Json out = Json::array();
  for (const auto& f : fields) out.push_back(to_string(f));
  return out;
}

}  // namespace

Json to_json(const Metric& m) { return Json{{"p", m.p()}, {"q", m.q()}}; }

Json to_json(const ConformalVerdict& verdict) {
  Json out;
  out["is_conformal"] = verdict.is_conformal;
  out["factor"] = verdict.factor ? Json(to_string(*verdict.factor)) : Json(nullptr);
  return out;
}

Json to_json(const StageOutcome& stage) {
  return Json{{"name", stage.name},
              {"completed", stage.completed},
              {"dimension", stage.dimension},
              {"detail", stage.detail}};
}

Json to_json(const WitnessCheck& witness) {
  return Json{{"Y", to_string(witness.y)},
              {"Z", to_string(witness.z)},
              {"bracket", to_string(witness.bracket)},
              {"divergence", to_string(witness.divergence)},
              {"nonzero", witness.nonzero},
              {"divergence_free", witness.divergence_free}};
}

Json to_json(const TraceStep& step) {
  Json coefficients = Json::array();
  for (const auto& c : step.coefficients) coefficients.push_back(to_string(c));
  return Json{{"op", std::string(to_string(step.op))},
              {"stage", step.stage},
              {"inputs", step.inputs},
              {"coefficients", std::move(coefficients)},
              {"output", to_string(step.output)}};
}

Json to_json(const ClosureReport& report) {
  Json out;
  out["generators"] = field_list(report.generators);
  out["degree_cap"] = report.degree_cap;
  out["dimension"] = report.final_span.dimension();
  out["full_dimension"] = report.final_span.full_dimension();
  out["saturated"] = report.saturated;
  out["bracket_count"] = report.bracket_count;
  out["discarded_above_cap"] = report.discarded_count;
  out["rounds"] = report.rounds;
  out["representatives"] = field_list(report.representatives);
  return out;
}

Json to_json(const MaximalityReport& report, bool include_trace) {
  Json out;
  out["subject"] = report.subject;
  out["signature"] = to_json(report.signature);
  out["seed"] = to_string(report.seed);
  out["cap"] = report.cap;
  Json stages = Json::array();
  for (const auto& s : report.stages) stages.push_back(to_json(s));
  out["stages"] = std::move(stages);
  out["reduced_linear"] =
      report.reduced_linear ? Json(to_string(*report.reduced_linear)) : Json(nullptr);
  out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  out["final_dimension"] = report.final_span.dimension();
  out["target_dimension"] = report.target_dimension;
  out["bracket_count"] = report.bracket_count;
  out["trace_length"] = report.witness_trace.size();
  out["verdict"] = report.verdict;
  if (include_trace) {
    Json trace = Json::array();
    for (const auto& step : report.witness_trace) trace.push_back(to_json(step));
    out["trace"] = std::move(trace);
  }
  return out;
}

}  // namespace polyconf
