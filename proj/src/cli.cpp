#include "polyconf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "polyconf/closure.hpp"
#include "polyconf/errors.hpp"
#include "polyconf/field_text.hpp"
#include "polyconf/report_json.hpp"

namespace polyconf {

namespace {

struct Settings {
  std::size_t n = 0;
  std::optional<std::size_t> p;
  std::optional<std::size_t> q;
  int cap = -1;
  std::vector<std::string> exprs;
  std::string seed;
  std::string which;
  int monomials = -1;
  bool trace = false;
  bool json = false;
  unsigned threads = 1;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Metric signature_of(const Settings& s) {
  if (!s.p || !s.q) throw UsageError("--p and --q are required");
  Metric m(*s.p, *s.q);
  if (s.n != 0 && s.n != m.dimension()) {
    throw UsageError("--n " + std::to_string(s.n) + " does not match p + q = " +
                     std::to_string(m.dimension()));
  }
  return m;
}

std::size_t dimension_of(const Settings& s) {
  if (s.n != 0) return s.n;
  if (s.p && s.q) return *s.p + *s.q;
  throw UsageError("--n is required");
}

Json envelope(const std::string& command, const Settings& s) {
  Json doc;
  doc["command"] = command;
  Json inputs;
  if (s.n != 0) inputs["n"] = s.n;
  if (s.p) inputs["p"] = *s.p;
  if (s.q) inputs["q"] = *s.q;
  if (s.cap >= 0) inputs["cap"] = s.cap;
  if (!s.exprs.empty()) inputs["exprs"] = s.exprs;
  if (!s.seed.empty()) inputs["seed"] = s.seed;
  if (!s.which.empty()) inputs["which"] = s.which;
  if (s.monomials >= 0) inputs["monomials"] = s.monomials;
  doc["inputs"] = inputs.is_null() ? Json::object() : inputs;
  doc["signature"] = (s.p && s.q) ? Json{{"p", *s.p}, {"q", *s.q}} : Json(nullptr);
  doc["cap"] = s.cap >= 0 ? Json(s.cap) : Json(nullptr);
  doc["result"] = nullptr;
  doc["dimensions"] = nullptr;
  doc["verdict"] = nullptr;
  return doc;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_bracket(const Settings& s, std::ostream& out) {
  if (s.exprs.size() != 2) throw UsageError("bracket takes exactly two fields");
  const std::size_t n = dimension_of(s);
  VectorField result = lie_bracket(parse_field(s.exprs[0], n), parse_field(s.exprs[1], n));
  if (s.json) {
    Json doc = envelope("bracket", s);
    doc["result"] = print_field(result);
    emit(out, doc);
  } else {
    out << print_field(result) << '\n';
  }
  return kExitSuccess;
}

int cmd_check(const Settings& s, std::ostream& out) {
  if (s.exprs.size() != 1) throw UsageError("check takes exactly one field");
  const Metric m = signature_of(s);
  const ConformalVerdict verdict = conformal_check(parse_field(s.exprs[0], m.dimension()), m);
  if (s.json) {
    Json doc = envelope("check", s);
    doc["result"] = to_json(verdict);
    doc["verdict"] = verdict.is_conformal;
    emit(out, doc);
  } else {
    out << (verdict.is_conformal ? "conformal" : "not conformal") << '\n';
    if (verdict.factor) out << "factor: " << to_string(*verdict.factor) << '\n';
  }
  return verdict.is_conformal ? kExitSuccess : kExitVerdictFalse;
}

std::vector<std::string> basis_labels(const Metric& m) {
  const std::size_t n = m.dimension();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("translation " + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back((m.sign(i) == m.sign(j) ? "rotation " : "boost ") + std::to_string(i + 1) +
                       "," + std::to_string(j + 1));
    }
  }
  labels.push_back("dilation");
  for (std::size_t i = 0; i < n; ++i) labels.push_back("special " + std::to_string(i + 1));
  return labels;
}

int cmd_basis(const Settings& s, std::ostream& out) {
  const Metric m = signature_of(s);
  const auto basis = so_conformal_basis(m);
  const auto labels = basis_labels(m);
  if (s.json) {
    Json doc = envelope("basis", s);
    Json items = Json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      items.push_back(Json{{"label", labels[k]}, {"field", print_field(basis[k])}});
    }
    doc["result"] = std::move(items);
    doc["dimensions"] = Json{{"basis", basis.size()}};
    emit(out, doc);
  } else {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out << labels[k] << ": " << print_field(basis[k]) << '\n';
    }
    out << "dimension: " << basis.size() << '\n';
  }
  return kExitSuccess;
}

int cmd_closure(const Settings& s, std::ostream& out, const ClosureOptions& options) {
  if (s.cap < 0) throw UsageError("--cap is required");
  const std::size_t n = dimension_of(s);
  std::vector<VectorField> generators;
  if (s.p || s.q) {
    for (auto& f : so_conformal_basis(signature_of(s))) generators.push_back(std::move(f));
  }
  if (s.monomials >= 0) {
    for (const auto& mono : monomials_up_to(n, s.monomials)) {
      for (std::size_t i = 0; i < n; ++i) {
        generators.push_back(VectorField::monomial_field(Rational(1), mono, i));
      }
    }
  }
  for (const auto& e : s.exprs) generators.push_back(parse_field(e, n));
  const ClosureReport report = lie_closure(generators, s.cap, options);
  if (s.json) {
    Json doc = envelope("closure", s);
    doc["result"] = to_json(report);
    doc["dimensions"] = Json{{"final", report.final_span.dimension()},
                             {"full", report.final_span.full_dimension()}};
    doc["verdict"] = report.saturated;
    emit(out, doc);
  } else {
    out << "generators: " << report.generators.size() << '\n';
    out << "cap: " << report.degree_cap << '\n';
    out << "dimension: " << report.final_span.dimension() << " / "
        << report.final_span.full_dimension() << '\n';
    out << "brackets: " << report.bracket_count << " (discarded above cap "
        << report.discarded_count << ")\n";
    out << "rounds: " << report.rounds << '\n';
    out << "saturated: " << (report.saturated ? "true" : "false") << '\n';
  }
  return report.saturated ? kExitSuccess : kExitVerdictFalse;
}

void print_maximality(const MaximalityReport& r, bool trace, std::ostream& out) {
  out << "subject: " << r.subject << '\n';
  out << "signature: (" << r.signature.p() << "," << r.signature.q() << ")\n";
  out << "seed: " << print_field(r.seed) << '\n';
  out << "cap: " << r.cap << '\n';
  for (const auto& st : r.stages) {
    out << "stage " << st.name << ": " << (st.completed ? "ok" : "incomplete") << ", dimension "
        << st.dimension << " (" << st.detail << ")\n";
  }
  if (r.witness) {
    out << "witness [Y, Z] = " << print_field(r.witness->bracket) << ", divergence "
        << to_string(r.witness->divergence) << '\n';
  }
  out << "brackets: " << r.bracket_count << '\n';
  out << "trace steps: " << r.witness_trace.size() << '\n';
  out << "dimension: " << r.final_span.dimension() << " / " << r.target_dimension << '\n';
  out << "verdict: " << (r.verdict ? "true" : "false") << '\n';
  if (trace) {
    for (std::size_t k = 0; k < r.witness_trace.size(); ++k) {
      const auto& step = r.witness_trace[k];
      out << "#" << k << " " << to_string(step.op) << " [" << step.stage << "]";
      for (auto in : step.inputs) out << " " << in;
      for (const auto& c : step.coefficients) out << " c=" << to_string(c);
      out << " -> " << print_field(step.output) << '\n';
    }
  }
}

int report_maximality(const std::string& command, const Settings& s, const MaximalityReport& r,
                      std::ostream& out) {
  if (s.json) {
    Json doc = envelope(command, s);
    Json body = to_json(r, false);
    doc["result"] = std::move(body);
    doc["dimensions"] = Json{{"final", r.final_span.dimension()}, {"target", r.target_dimension}};
    doc["verdict"] = r.verdict;
    if (s.trace) {
      Json trace = Json::array();
      for (const auto& step : r.witness_trace) trace.push_back(to_json(step));
      doc["trace"] = std::move(trace);
    }
    emit(out, doc);
  } else {
    print_maximality(r, s.trace, out);
  }
  return r.verdict ? kExitSuccess : kExitVerdictFalse;
}

int cmd_verify(const Settings& s, std::ostream& out, const ClosureOptions& options) {
  if (s.cap < 0) throw UsageError("--cap is required");
  if (s.seed.empty()) throw UsageError("--seed is required");
  const Metric m = signature_of(s);
  const auto report = verify_maximality(m, parse_field(s.seed, m.dimension()), s.cap, options);
  return report_maximality("verify", s, report, out);
}

int cmd_scenario(const Settings& s, std::ostream& out, const ClosureOptions& options) {
  if (s.cap < 0) throw UsageError("--cap is required");
  const Scenario which = parse_scenario(s.which);
  std::optional<VectorField> seed;
  if (!s.seed.empty()) seed = parse_field(s.seed, 2);
  const auto report = scenario_n2_chain(which, s.cap, seed, options);
  return report_maximality("scenario", s, report, out);
}

int cmd_dims(const Settings& s, std::ostream& out) {
  if (s.cap < 0) throw UsageError("--cap is required");
  const Metric m = signature_of(s);
  const std::size_t dim = conformal_solution_space(m, s.cap).size();
  if (s.json) {
    Json doc = envelope("dims", s);
    doc["result"] = dim;
    doc["dimensions"] = Json{{"conformal", dim},
                             {"ambient", field_space_dimension(m.dimension(), s.cap)}};
    emit(out, doc);
  } else {
    out << dim << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact polynomial vector fields and conformal maximality checks", "polyconf"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", s.json, "Structured output");
  app.add_option("--threads", s.threads, "Workers for bracket evaluation")->check(CLI::Range(1u, 256u));

  auto add_dimension = [&](CLI::App* sub) { sub->add_option("--n", s.n, "Dimension n")->check(CLI::Range(1u, 64u)); };
  auto add_signature = [&](CLI::App* sub) {
    sub->add_option("--p", s.p, "Count of +1 entries");
    sub->add_option("--q", s.q, "Count of -1 entries");
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", s.cap, "Degree cap")->check(CLI::Range(0, 64)); };

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
  add_dimension(bracket);
  bracket->add_option("exprs", s.exprs, "Two fields")->expected(2);

  auto* check = app.add_subcommand("check", "Conformality verdict and factor");
  add_dimension(check);
  add_signature(check);
  check->add_option("exprs", s.exprs, "Field")->expected(1);

  auto* basis = app.add_subcommand("basis", "so(p+1,q+1) basis");
  add_dimension(basis);
  add_signature(basis);

  auto* closure = app.add_subcommand("closure", "Degree-capped Lie closure");
  add_dimension(closure);
  add_signature(closure);
  add_cap(closure);
  closure->add_option("--monomials", s.monomials, "Add every monomial field of degree <= K")
      ->check(CLI::Range(0, 64));
  closure->add_option("exprs", s.exprs, "Generator fields");

  auto* verify = app.add_subcommand("verify", "Maximality of conf_poly(p,q) at a degree cap");
  add_dimension(verify);
  add_signature(verify);
  add_cap(verify);
  verify->add_option("--seed", s.seed, "Non-conformal seed field");
  verify->add_flag("--trace", s.trace, "Include the witness trace");

  auto* scenario = app.add_subcommand("scenario", "n = 2 subalgebra chain checks");
  scenario->add_option("--which", s.which, "so31-in-holomorphic | so22-in-product-sl2 | product-sl2-in-product")
      ->required();
  add_cap(scenario);
  scenario->add_option("--seed", s.seed, "Override the default seed");
  scenario->add_flag("--trace", s.trace, "Include the witness trace");

  auto* dims = app.add_subcommand("dims", "Dimension of conformal fields in Vect_{<=cap}");
  add_dimension(dims);
  add_signature(dims);
  add_cap(dims);

  try {
    // Only long options exist, so a single leading '-' starts a field
    // expression such as "-x1 d1"; the padding keeps CLI11 from reading it
    // as a short flag.
    std::vector<std::string> reversed;
    reversed.reserve(args.size());
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      const std::string& a = *it;
      const bool expression = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
      reversed.push_back(expression ? " " + a : a);
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
  }

  const ClosureOptions options{s.threads};
  try {
    if (bracket->parsed()) return cmd_bracket(s, out);
    if (check->parsed()) return cmd_check(s, out);
    if (basis->parsed()) return cmd_basis(s, out);
    if (closure->parsed()) return cmd_closure(s, out, options);
    if (verify->parsed()) return cmd_verify(s, out, options);
    if (scenario->parsed()) return cmd_scenario(s, out, options);
    if (dims->parsed()) return cmd_dims(s, out);
  } catch (const InternalInvariantError& e) {
    err << "internal invariant breach: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyconf
