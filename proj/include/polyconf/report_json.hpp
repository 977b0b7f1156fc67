#pragma once

#include <json.hpp>

#include "polyconf/closure.hpp"
#include "polyconf/conformal.hpp"

namespace polyconf {

using Json = nlohmann::ordered_json;

// Fields and polynomials are always written in canonical text form and
// rationals as "num/den" strings, so documents compare byte for byte.
Json to_json(const Metric& m);
Json to_json(const ConformalVerdict& verdict);
Json to_json(const StageOutcome& stage);
Json to_json(const WitnessCheck& witness);
Json to_json(const TraceStep& step);

// Summary of a closure run (generators, representatives, dimensions).
Json to_json(const ClosureReport& report);

// Full maximality document; the witness trace only when asked for.
Json to_json(const MaximalityReport& report, bool include_trace);

}  // namespace polyconf
