#include <doctest.h>

#include "catsem/scenario.hpp"

using namespace catsem;
using nlohmann::json;

namespace {

std::string scenario_path(const std::string& name) { return std::string(CATSEM_SOURCE_DIR) + "/scenarios/" + name; }

json without_duration(json j) {
  j.erase("duration_ms");
  return j;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("bundled nat-mlalg passes every square") {
    const Report r = run_scenario_file(scenario_path("nat-mlalg.json"));
    CHECK(r.status() == CheckStatus::pass);
    CHECK(r.exit_code() == 0);
    REQUIRE(r.checks.size() == 6);
    CHECK(r.checks[0].name == "unit-square");
    for (const auto& c : r.checks) CHECK_MESSAGE(c.status == CheckStatus::pass, c.name);
    CHECK(r.checks[1].fibers_checked == 85);
  }

  TEST_CASE("sabotaged Σ fails with a fiber witness") {
    const Report r = run_scenario_file(scenario_path("nat-sabotaged-sigma.json"));
    CHECK(r.exit_code() == 1);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[1].status == CheckStatus::fail);
    REQUIRE(r.checks[1].witness.has_value());
    CHECK(r.checks[1].witness->find("base element (0,())") != std::string::npos);
    const json j = to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"][1]["witness"].get<std::string>().find("(0,())") != std::string::npos);
  }

  TEST_CASE("empty scenario passes with zero counters") {
    const Report r = run_scenario_file(scenario_path("empty.json"));
    CHECK(r.checks.empty());
    CHECK(r.exit_code() == 0);
    const json j = to_json(r);
    CHECK(j["status"] == "pass");
    CHECK(j["duration_ms"].get<double>() >= 0.0);
  }

  TEST_CASE("all bundled scenarios except the sabotaged one pass") {
    for (const char* f : {"omega.json", "poly.json", "tt-golden.json"}) {
      const Report r = run_scenario_file(scenario_path(f));
      CHECK_MESSAGE(r.exit_code() == 0, f << "\n" << to_text(r));
    }
  }

  TEST_CASE("reports are deterministic apart from the duration") {
    const Scenario s = load_scenario(scenario_path("tt-golden.json"));
    const json a = without_duration(to_json(run_scenario(s)));
    const json b = without_duration(to_json(run_scenario(s)));
    CHECK(a.dump() == b.dump());
    RunOptions o;
    o.seed = 99;
    const json c = to_json(run_scenario(s, o));
    CHECK(c["seed"] == 99);
  }

  TEST_CASE("schema violations and unresolvable targets") {
    CHECK_THROWS_AS(parse_scenario(json::array()), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(json{{"checks", json::array()}}), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(json{{"name", "x"}, {"checks", json::array()}, {"extra", 1}}), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(json{{"name", "x"}, {"target", {{"kind", "nat"}, {"bound", 0}}},
                                        {"checks", json::array()}}),
                    ScenarioError);
    CHECK_THROWS_AS(parse_scenario(json{{"name", "x"},
                                        {"checks", {{{"name", "a"}, {"kind", "square"}}, {{"name", "a"}, {"kind", "square"}}}}}),
                    ScenarioError);
    CHECK_THROWS_AS(parse_scenario(json{{"name", "x"}, {"checks", {{{"name", "a"}, {"kind", "bogus"}}}}}), ScenarioError);
    const Scenario s = parse_scenario(json{{"name", "x"},
                                           {"target", {{"kind", "expressions"}, {"items", json::array()}}},
                                           {"checks", {{{"name", "a"}, {"kind", "ml-algebra"}}}}});
    CHECK_THROWS_AS(run_scenario(s), ScenarioError);
    const Scenario bad_cat = parse_scenario(json{{"name", "x"},
                                                 {"target", {{"kind", "category"}, {"index_category", "pentagon"}}},
                                                 {"checks", {{{"name", "a"}, {"kind", "omega-biconditional"}}}}});
    CHECK_THROWS_AS(run_scenario(bad_cat), ScenarioError);
    CHECK_THROWS_AS(load_scenario(scenario_path("missing.json")), ScenarioError);
    CHECK_THROWS_AS(emit_report(Report{}, "yaml"), ScenarioError);
  }

  TEST_CASE("explicit targets") {
    const Scenario fam = parse_scenario(json{
        {"name", "family"},
        {"target", {{"kind", "family"}, {"family", {{"fibers", {0, 1, 2}}}}}},
        {"checks", {{{"name", "unit"}, {"kind", "unit-search"}}}}});
    CHECK(run_scenario(fam).exit_code() == 0);
    const Scenario no_unit = parse_scenario(json{
        {"name", "family"},
        {"target", {{"kind", "family"}, {"family", {{"fibers", {0, 2}}}}}},
        {"checks", {{{"name", "unit"}, {"kind", "unit-search"}}}}});
    CHECK(run_scenario(no_unit).exit_code() == 1);
    const Scenario bound_override = parse_scenario(json{
        {"name", "nat"}, {"target", {{"kind", "nat"}, {"bound", 2}}},
        {"checks", {{{"name", "pi"}, {"kind", "square"}, {"square", "pi"}}}}});
    RunOptions o;
    o.bound = 3;
    CHECK(run_scenario(bound_override, o).checks[0].fibers_checked == 13);
  }

  TEST_CASE("report formats") {
    const Report r = run_scenario_file(scenario_path("nat-sabotaged-sigma.json"));
    const std::string text = emit_report(r, "text");
    CHECK(text.find("[fail] sigma-square") != std::string::npos);
    CHECK(text.find("witness:") != std::string::npos);
    const json j = json::parse(emit_report(r, "json"));
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][0]["counters"]["fibers_checked"] == 1);
  }
}
