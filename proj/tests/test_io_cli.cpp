#include <doctest.h>

#include "interdec/cli.hpp"
#include "support.hpp"

using namespace interdec;

namespace {

const char* kVee = R"({
  "poset": {"elements": ["0", "1", "1'"], "leq": [["0", "1"], ["0", "1'"]]},
  "dim": 3,
  "projectors": {
    "0":  [[1,0,0],[0,0,0],[0,0,0]],
    "1":  [[1,0,0],[0,1,0],[0,0,0]],
    "1'": [[1,0,0],[0,0,0],[0,0,1]]
  }
})";

const char* kCorrelated = R"({
  "factors": {"1": 2, "2": 2},
  "weights": {"0,0": "1/2", "1,1": "1/2"}
})";

CliRequest request(Command c, InputKind k, OutputFormat f = OutputFormat::kJson) { return {c, k, f}; }

}  // namespace

TEST_CASE("JSON parse errors carry a location") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json(1.5), "x"), ParseError);
  CHECK(rat_from_json(Json(3), "x") == 3);
  CHECK(rat_from_json(Json("-2/6"), "x") == make_rat(-1, 3));
  try {
    matrix_from_json(Json::parse("[[1, 2]]"), 2, 2, "here");
    FAIL("expected a shape error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("here") != std::string::npos);
  }
}

TEST_CASE("round trips") {
  SUBCASE("family") {
    const ProjectorFamily f = family_from_json(Json::parse(kVee));
    CHECK(family_from_json(family_to_json(f)).projectors() == f.projectors());
    CHECK(family_to_json(family_from_json(family_to_json(f))) == family_to_json(f));
  }
  SUBCASE("measure, zero weights dropped") {
    const Measure m = measure_from_json(Json::parse(kCorrelated));
    CHECK(m.weights() == std::vector<Rat>{make_rat(1, 2), 0, 0, make_rat(1, 2)});
    const Json out = measure_to_json(m);
    CHECK(out["weights"].size() == 2);
    CHECK(measure_from_json(out).weights() == m.weights());
  }
  SUBCASE("split functor") {
    testing_support::Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = testing_support::random_poset(rng, testing_support::uniform(rng, 1, 4));
      const auto fs = testing_support::framed_sum(rng, p, 2);
      const auto sf = testing_support::conjugate(rng, sum_of_components(p, fs.component_dims, fs.arrows));
      const SplitFunctor back = split_from_json(split_to_json(sf));
      CHECK(back.dims() == sf.dims());
      for (const auto& [lo, hi] : p.strict_pairs()) {
        CHECK(back.g(lo, hi) == sf.g(lo, hi));
        CHECK(back.f(hi, lo) == sf.f(hi, lo));
      }
    }
  }
}

TEST_CASE("schema violations are parse errors") {
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"dim": 1})")), ParseError);
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"factors": {"1": 2}, "weights": {"2": "1"}})")), ParseError);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "leq": [["a", "b"]]})")), PosetError);
}

TEST_CASE("cli verdicts and exit codes") {
  SUBCASE("decomposable family") {
    const CliResult r = run_request(request(Command::kDecompose, InputKind::kProjectors), kVee);
    CHECK(r.exit_code == kExitDecomposable);
    const Json rep = Json::parse(r.output);
    CHECK(rep["verdict"] == "decomposable");
    CHECK(rep["dims"]["1'"] == 1);
    CHECK(rep["dims"][kTopName] == 0);
    CHECK(rep["decomposition"]["s"]["1"] == Json::parse(R"([["0","0","0"],["0","1","0"],["0","0","0"]])"));
  }
  SUBCASE("check carries no matrices") {
    const Json rep = Json::parse(run_request(request(Command::kCheck, InputKind::kProjectors), kVee).output);
    CHECK(rep["decomposition"] == Json{{"certified", true}});
  }
  SUBCASE("correlated measure fails with a witness") {
    const CliResult r = run_request(request(Command::kCheck, InputKind::kMeasure), kCorrelated);
    CHECK(r.exit_code == kExitNotDecomposable);
    const Json rep = Json::parse(r.output);
    CHECK(rep["verdict"] == "not-decomposable");
    CHECK(rep["witnesses"] == Json::parse(R"([{"a": "{1}", "b": "{2}"}])"));
    CHECK_FALSE(rep.contains("decomposition"));
  }
  SUBCASE("invalid input") {
    for (const char* doc : {"{", R"({"poset": {"elements": []}})", R"([1, 2])"}) {
      const CliResult r = run_request(request(Command::kCheck, InputKind::kProjectors), doc);
      CHECK(r.exit_code == kExitInvalidInput);
      CHECK_FALSE(r.error.empty());
      CHECK(Json::parse(r.output)["verdict"] == "invalid-input");
    }
    const CliResult missing = run_request_file(request(Command::kCheck, InputKind::kSplit), "/nonexistent.json");
    CHECK(missing.exit_code == kExitInvalidInput);
  }
  SUBCASE("text format") {
    const CliResult r = run_request(request(Command::kCheck, InputKind::kMeasure, OutputFormat::kText), kCorrelated);
    CHECK(r.output.find("verdict: not-decomposable") != std::string::npos);
    CHECK(r.output.find("witness: a={1} b={2}") != std::string::npos);
  }
  SUBCASE("output is deterministic") {
    const auto req = request(Command::kDecompose, InputKind::kProjectors);
    CHECK(run_request(req, kVee).output == run_request(req, kVee).output);
  }
}
