#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <sstream>

#include "bbd/cli.hpp"
#include "bbd/error.hpp"

using namespace bbd;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Outcome run_args(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Outcome run(const std::string& command, const json& spec, std::vector<std::string> flags = {}) {
  flags.insert(flags.begin(), command);
  return run_args(flags, spec.dump());
}

const std::vector<std::string> kCommands = {"bb", "kempf", "stabilize", "algebraize", "universal-quotient", "fixed"};

}  // namespace

TEST_CASE("catalog lists every entry and validates it") {
  auto r = run_args({"catalog", "list"});
  CHECK(r.code == 0);
  for (const char* key : {"gm-a1", "t2-a2", "t2-toric", "gl2-m2-std", "gl2-m2-dual", "gl2-m2-sum", "gl3-m3-std", "m2",
                          "m3", "upper-tri-2", "opposite-weights"}) {
    CHECK(r.out.find(key) != std::string::npos);
    const auto& e = cli::catalog_entry(key);
    auto m = e.build(e.default_weights);
    CHECK_NOTHROW(validate_monoid(m));
    CHECK(m.group.dim() == e.default_variables.size());
  }
  CHECK_THROWS_AS(cli::catalog_entry("nope"), ParseError);
  CHECK(run_args({"catalog", "show", "nope"}).code == 2);
}

TEST_CASE("catalog show produces an equivalent inline document") {
  for (const auto& e : cli::catalog()) {
    auto shown = run_args({"catalog", "show", e.key});
    REQUIRE(shown.code == 0);
    json doc = shown.doc();
    json inline_spec = {{"variables", doc["variables"]},
                        {"weights", doc["weights"]},
                        {"group", doc["group"]},
                        {"monoid", doc["monoid"]}};
    json by_key = {{"catalog", e.key}};
    for (const char* cmd : {"kempf", "universal-quotient", "bb"}) {
      auto a = run(cmd, by_key), b = run(cmd, inline_spec);
      CHECK_MESSAGE(a.code == b.code, e.key << " " << cmd);
      CHECK_MESSAGE(a.out == b.out, e.key << " " << cmd);
    }
  }
}

TEST_CASE("bb examples") {
  auto r = run("bb", {{"catalog", "gm-a1"}, {"weights", {{1}, {-1}}}});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["attractor"] == json({"y"}));
  CHECK(r.doc()["fixed"] == json({"x", "y"}));
  CHECK(r.doc()["verification"]["section_identity"] == true);

  auto triv = run("bb", {{"variables", {"x", "y"}}, {"weights", {{0}, {0}}}, {"ideal", {"x^2 - y^3"}}});
  REQUIRE(triv.code == 0);
  CHECK(triv.doc()["attractor"] == triv.doc()["fixed"]);
  CHECK(triv.doc()["unit_map"] == json({"x", "y"}));
  CHECK(triv.doc()["limit_map"] == json({"x", "y"}));
  CHECK(triv.doc()["section_map"] == json({"x", "y"}));

  auto std2 = run("bb", {{"catalog", "gl2-m2-std"}});
  REQUIRE(std2.code == 0);
  CHECK(std2.doc()["attractor"] == json::array());
  CHECK(std2.doc()["fixed"] == json({"x1", "x2"}));
}

TEST_CASE("kempf examples") {
  auto m2 = run("kempf", {{"catalog", "m2"}});
  CHECK(m2.doc()["kempf"]["cochar"] == json({1}));
  auto b = run("kempf", {{"catalog", "upper-tri-2"}});
  CHECK(b.doc()["kempf"]["cochar"] == json({1, 1}));
  auto opp = run("kempf", {{"catalog", "opposite-weights"}});
  CHECK(opp.code == 0);
  CHECK(opp.doc()["kempf"].is_null());
  CHECK(opp.doc()["status"] == "not Kempf through given torus");
}

TEST_CASE("stabilize examples") {
  json line = {{"variables", {"x"}}, {"weights", {{1}}}, {"characters", {{2}, {0}, {5}}}};
  auto r = run("stabilize", line, {"--depth", "4"});
  REQUIRE(r.code == 0);
  auto rows = r.doc()["rows"];
  // rows follow the character order: 0, 2, 5
  CHECK(rows[0]["predicted"] == 0);
  CHECK(rows[0]["observed"] == 0);
  CHECK(rows[1]["predicted"] == 2);
  CHECK(rows[1]["observed"] == 2);
  CHECK(rows[1]["dims"] == json({0, 0, 1, 1, 1}));
  CHECK(rows[2]["status"] == "inconclusive");
  auto shallow = run("stabilize", {{"variables", {"x"}}, {"weights", {{1}}}, {"characters", {{5}}}}, {"--depth", "1"});
  CHECK(shallow.doc()["rows"][0]["status"] == "inconclusive");

  json mod = line;
  mod["characters"] = {{2}};
  mod["module"] = {{"generator_weights", {{-1}}}};
  auto m = run("stabilize", mod, {"--depth", "5"});
  REQUIRE(m.code == 0);
  CHECK(m.doc()["module"]["minimal_weight"] == -1);
  CHECK(m.doc()["module"]["rows"][0]["predicted"] == 3);
  CHECK(m.doc()["module"]["rows"][0]["observed"] == 3);
}

TEST_CASE("algebraize example") {
  auto r = run("algebraize", {{"variables", {"x", "y"}}, {"weights", {{1}, {1}}}, {"ideal", {"x*y"}},
                              {"characters", {{3}}}});
  REQUIRE(r.code == 0);
  auto p = r.doc()["pieces"][0];
  CHECK(p["level"] == 4);
  CHECK(p["dimension"] == 2);
  CHECK(p["basis"] == json({"y^3", "x^3"}));
  auto deep = run("algebraize", {{"variables", {"x"}}, {"weights", {{1}}}, {"characters", {{9}}}});
  CHECK(deep.code == 3);
}

TEST_CASE("universal quotient examples") {
  auto line = run("universal-quotient", {{"catalog", "gm-a1"}});
  CHECK(line.doc()["dimension"] == 1);
  CHECK(line.doc()["basis"] == json({"x"}));
  auto pos = run("universal-quotient", {{"catalog", "gm-a1"}, {"weights", {{1}, {0}}}});
  CHECK(pos.doc()["dimension"] == 2);
  auto neg = run("universal-quotient", {{"catalog", "gm-a1"}, {"weights", {{-1}, {-2}}}});
  CHECK(neg.doc()["dimension"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_args({"bb"}, "{not json").code == 2);
  CHECK(run("bb", {{"catalog", "missing"}}).code == 2);
  CHECK(run("bb", {{"catalg", "gm-a1"}}).code == 2);
  CHECK(run("bb", {{"variables", {"x", "y"}}, {"weights", {{1}, {2}}}, {"ideal", {"x + y"}}}).code == 2);
  CHECK(run("bb", {{"catalog", "gl2-m2-std"}, {"weights", {{1, 0}, {1, 0}}}}).code == 2);
  CHECK(run("bb", {{"variables", {"x"}}, {"weights", {{1}}}}, {"--order", "weird"}).code == 2);
  CHECK(run_args({"frobnicate"}).code == 2);
  CHECK(run_args({}).code == 2);
  auto inv = run("stabilize", {{"catalog", "gm-a1"}});
  CHECK(inv.code == 3);
  CHECK(json::parse(inv.err)["error"] == "precondition");
  CHECK(run("bb", {{"catalog", "opposite-weights"}}).code == 3);
  auto res = run("bb", {{"catalog", "gl2-m2-std"}, {"ideal", {"x1"}}}, {"--saturation-cap", "1"});
  CHECK(res.code == 4);
  CHECK(json::parse(res.err)["error"] == "resource");
  CHECK(run_args({"--help"}).code == 0);
}

TEST_CASE("global flags override the document") {
  json spec = {{"variables", {"x"}}, {"weights", {{1}}}, {"characters", {{1}}}, {"depth", 3}};
  CHECK(run("stabilize", spec).doc()["depth"] == 3);
  CHECK(run("stabilize", spec, {"--depth", "5"}).doc()["depth"] == 5);
  json cusp = {{"variables", {"x", "y"}}, {"weights", {{0}, {0}}}, {"ideal", {"x^2 - y^3"}}};
  CHECK(run("bb", cusp).doc()["attractor"] == json({"y^3 - x^2"}));
  CHECK(run("bb", cusp, {"--order", "lex"}).doc()["attractor"] == json({"x^2 - y^3"}));
}

TEST_CASE("problem documents round trip") {
  cli::ProblemSpec s;
  s.variables = {"x", "y"};
  s.order = "lex";
  s.ideal = {"x*y"};
  s.rank = 1;
  s.weights = {{1}, {2}};
  s.torus_monoid = std::vector<WeightVector>{{1}};
  s.cochar = WeightVector{1};
  s.characters = {{0}, {3}};
  s.module = cli::ModuleSpec{{{-1}, {0}}, {{"y", "x^3"}}};
  s.depth = 7;
  s.degree_bound = 5;
  s.saturation_cap = 9;
  const std::string text = cli::serialize_spec(s);
  CHECK(cli::parse_spec(text) == s);
  CHECK(cli::serialize_spec(cli::parse_spec(text)) == text);

  for (const auto& e : cli::catalog()) {
    json doc = run_args({"catalog", "show", e.key}).doc();
    json in = {{"variables", doc["variables"]}, {"weights", doc["weights"]}, {"group", doc["group"]},
               {"monoid", doc["monoid"]}};
    cli::ProblemSpec p = cli::parse_spec(in.dump());
    CHECK(cli::parse_spec(cli::serialize_spec(p)) == p);
    CHECK(json::parse(cli::serialize_spec(p)) == in);
  }
  CHECK_THROWS_AS(cli::parse_spec("[1, 2]"), ParseError);
  CHECK_THROWS_AS(cli::parse_spec(R"({"depth": "deep"})"), ParseError);
}

TEST_CASE("determinism over the catalog") {
  for (const auto& e : cli::catalog())
    for (const auto& cmd : kCommands) {
      json spec = {{"catalog", e.key}};
      auto a = run(cmd, spec), b = run(cmd, spec);
      CHECK_MESSAGE(a.code == b.code, e.key << " " << cmd);
      CHECK_MESSAGE(a.out == b.out, e.key << " " << cmd);
      CHECK_MESSAGE(a.err == b.err, e.key << " " << cmd);
    }
}
