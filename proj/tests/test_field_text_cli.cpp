#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "polyconf/cli.hpp"
#include "polyconf/errors.hpp"
#include "polyconf/field_text.hpp"
#include "support.hpp"

using namespace polyconf;
using polyconf::testing::Random;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_field") {
  auto x = parse_field("x1^2 d2", 2);
  CHECK(x[0].is_zero());
  CHECK(x[1] == Polynomial::term(1, Monomial{2, 0}));
  auto y = parse_field("-x1 d1 + 1/2 x2^2 d2", 2);
  CHECK(y[0] == -Polynomial::variable(2, 0));
  CHECK(y[1] == Polynomial::term(Rational(1, 2), Monomial{0, 2}));
  CHECK(parse_field("0", 3).is_zero());
  CHECK(parse_field("2*x1*x2 d1", 2) == parse_field("2 x1 x2 d1", 2));
  CHECK(parse_field("x1 x1 d1", 2) == parse_field("x1^2 d1", 2));
  CHECK(parse_field("  d1-d2 ", 2) == parse_field("d1 - 1 d2", 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_field("x3 d1", 2), ParseError);
  CHECK_THROWS_AS(parse_field("x1 d3", 2), ParseError);
  CHECK_THROWS_AS(parse_field("1/0 d1", 2), ParseError);
  CHECK_THROWS_AS(parse_field("", 2), ParseError);
  CHECK_THROWS_AS(parse_field("   ", 2), ParseError);
  CHECK_THROWS_AS(parse_field("x1", 2), ParseError);
  CHECK_THROWS_AS(parse_field("x1 d1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_field("x1 d1 $", 2), ParseError);
  CHECK_THROWS_AS(parse_field("d1 + -1 d2", 2), ParseError);
  try {
    parse_field("d1 + x1 d1 + x9 d2", 2);
    FAIL("accepted x9");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
  CHECK(parse_polynomial("x1^2 - 1/3", 1).degree() == 2);
  CHECK_THROWS_AS(parse_polynomial("x1 d1", 2), ParseError);
}

TEST_CASE("print_field") {
  CHECK(print_field(parse_field("x1^2 d2", 2)) == "x1^2 d2");
  CHECK(print_field(VectorField(2)) == "0");
  CHECK(print_field(parse_field("-d1", 2)) == "-1 d1");
}

TEST_CASE("parse after print is the identity") {
  Random rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto x = rng.field(n, 3);
    CHECK(parse_field(print_field(x), n) == x);
  }
}

TEST_CASE("cli examples") {
  auto check = run({"check", "--n", "2", "--p", "2", "--q", "0", "x1 d1 + x2 d2"});
  CHECK(check.code == kExitSuccess);
  CHECK(check.out.find("conformal") != std::string::npos);
  CHECK(check.out.find("factor: 2") != std::string::npos);

  auto verify = run({"verify", "--n", "2", "--p", "2", "--q", "0", "--cap", "3", "--seed", "x2 d2"});
  CHECK(verify.code == kExitSuccess);
  CHECK(verify.out.find("dimension: 20 / 20") != std::string::npos);
  CHECK(verify.out.find("verdict: true") != std::string::npos);

  auto dims = run({"dims", "--n", "3", "--p", "3", "--q", "0", "--cap", "4"});
  CHECK(dims.code == kExitSuccess);
  CHECK(dims.out == "10\n");

  auto bracket = run({"bracket", "--n", "2", "-x1 d1", "x1*x2 d1 + 1/2 x2^2 d2 - 1/2 x1^2 d2"});
  CHECK(bracket.code == kExitSuccess);
  CHECK(bracket.out == "x1^2 d2\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"check", "--n", "2", "--p", "2", "--q", "0", "x1^2 d2"}).code == kExitVerdictFalse);
  CHECK(run({"closure", "--n", "2", "--cap", "3", "d1", "d2"}).code == kExitVerdictFalse);
  CHECK(run({"bracket", "--n", "2", "x3 d1", "d1"}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"check", "--n", "2", "--p", "1", "--q", "0", "d1"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "2", "--p", "2", "--q", "0", "--cap", "3", "--seed", "x1 d1 + x2 d2"})
            .code == kExitUsage);
  CHECK(run({"scenario", "--which", "bogus", "--cap", "3"}).code == kExitUsage);
  CHECK(run({"scenario", "--which", "so31-in-holomorphic", "--cap", "4"}).code == kExitSuccess);
  CHECK(run({"closure", "--n", "2", "--cap", "3", "--monomials", "2"}).code == kExitSuccess);
}

TEST_CASE("dims for n = 2 is 2(cap + 1)") {
  for (const char* p : {"2", "1"}) {
    const std::string q = std::string(p) == "2" ? "0" : "1";
    for (int cap = 1; cap <= 5; ++cap) {
      auto r = run({"dims", "--n", "2", "--p", p, "--q", q, "--cap", std::to_string(cap)});
      CHECK(r.out == std::to_string(2 * (cap + 1)) + "\n");
    }
  }
}

TEST_CASE("json and human output agree") {
  auto human = run({"verify", "--n", "2", "--p", "1", "--q", "1", "--cap", "3", "--seed", "x1^2 d2"});
  auto json = run({"--json", "verify", "--n", "2", "--p", "1", "--q", "1", "--cap", "3", "--seed",
                   "x1^2 d2"});
  CHECK(human.code == json.code);
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["command"] == "verify");
  CHECK(doc["verdict"] == true);
  CHECK(doc["cap"] == 3);
  CHECK(doc["signature"]["p"] == 1);
  CHECK_FALSE(doc.contains("trace"));
  const std::size_t dim = doc["result"]["final_dimension"];
  CHECK(human.out.find("dimension: " + std::to_string(dim) + " / 20") != std::string::npos);
  for (const auto& stage : doc["result"]["stages"]) {
    const std::string line = "stage " + stage["name"].get<std::string>();
    CHECK(human.out.find(line) != std::string::npos);
    CHECK(human.out.find("dimension " + std::to_string(stage["dimension"].get<std::size_t>())) !=
          std::string::npos);
  }

  auto dh = run({"dims", "--n", "4", "--p", "2", "--q", "2", "--cap", "2"});
  auto dj = run({"--json", "dims", "--n", "4", "--p", "2", "--q", "2", "--cap", "2"});
  CHECK(dh.out == std::to_string(nlohmann::json::parse(dj.out)["result"].get<int>()) + "\n");

  auto traced = run({"--json", "verify", "--n", "2", "--p", "2", "--q", "0", "--cap", "2", "--seed",
                     "x2 d2", "--trace"});
  CHECK(nlohmann::json::parse(traced.out).contains("trace"));
}
