#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gkz/bundled.hpp"
#include "gkz/io.hpp"

using namespace gkz;

namespace {

Json a1_json() {
  return Json::parse(R"({
    "name": "a1",
    "points": [[1, 0], [1, 1], [1, 2]],
    "height": [1, 0],
    "triangulations": {"fine": [0, -1, 0], "coarse": [0, 1, 0]},
    "flips": {"resolution": ["fine", "coarse"]}
  })");
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("round trip with defaults") {
    auto c = parse_config(a1_json());
    CHECK(c.name == "a1");
    CHECK(c.config.n() == 3);
    CHECK(c.config.d() == 2);
    CHECK(c.beta == IVec(2, Int(0)));
    CHECK(c.heights.size() == 2);
    CHECK(c.flips.size() == 1);
    CHECK(c.policy.bound == 12);
    CHECK(c.policy.nodes == 64);
    Json r = resolved_config(c);
    CHECK(r["bound"] == 12);
    CHECK(r["tolerance"] == 1e-6);
    CHECK(r["points"][2] == Json::array({1, 2}));
    CHECK(r["triangulations"]["fine"] == Json::array({"0", "-1", "0"}));
  }
  SUBCASE("unknown keys are rejected") {
    Json j = a1_json();
    j["extra"] = 1;
    CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("unknown key"), gkz_error);
  }
  SUBCASE("missing required keys") {
    Json j = a1_json();
    j.erase("height");
    CHECK_THROWS_AS(parse_config(j), gkz_error);
  }
  SUBCASE("flip naming an unknown triangulation") {
    Json j = a1_json();
    j["flips"]["bad"] = Json::array({"fine", "nope"});
    CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("unknown triangulation"), gkz_error);
  }
  SUBCASE("rational heights as strings") {
    Json j = a1_json();
    j["triangulations"]["half"] = Json::array({"1/2", 0, "-3/2"});
    auto c = parse_config(j);
    CHECK(c.heights.back().second[0] == rat(1, 2));
    j["triangulations"]["bad"] = Json::array({"1/x", 0, 0});
    CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("not a rational"), gkz_error);
  }
  SUBCASE("evaluation points, exact and floating") {
    Json j = a1_json();
    j["zpoints"] = Json::array();
    j["zpoints"].push_back(Json{{"mlog", {"5", "10", "5"}}, {"arg_pi", {"-1/2", "-1/2", "-1/2"}}});
    j["zpoints"].push_back(Json{{"values", {{0.1, 0.0}, {0.0, 0.2}, {-0.1, 0.0}}}});
    auto c = parse_config(j);
    REQUIRE(c.zpoints.size() == 2);
    CHECK(c.zpoints[0].mlog[1] == 10);
    // the floating form is snapped to exact dyadic branch data
    CHECK(std::abs(c.zpoints[1].values()[1] - cplx(0.0, 0.2)) < 1e-9);
    j["zpoints"].push_back(Json{{"mlog", {"1", "1"}}, {"arg_pi", {"0", "0"}}});
    CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("length"), gkz_error);
  }
  SUBCASE("degenerate inputs are refused by validation") {
    Json j = a1_json();
    j["points"] = Json::array();
    CHECK_THROWS_AS(parse_config(j), gkz_error);
  }
}

TEST_CASE("toml subset") {
  SUBCASE("tables, arrays, scalars, comments") {
    Json j = parse_toml(R"(# header comment
name = "demo"
bound = 14
tolerance = 1e-7
points = [[1, 0], [1, 1], [1, 2]]  # nested arrays
height = [1, 0]

[triangulations]
fine = [0, -1, 0]
half = ["1/2", 0, 0]

[flips]
resolution = ["fine", "half"]

[[zpoints]]
mlog = ["5", "10", "5"]
arg_pi = ["-1/2", "-1/2", "-1/2"]
)");
    CHECK(j["name"] == "demo");
    CHECK(j["bound"] == 14);
    CHECK(j["tolerance"] == 1e-7);
    CHECK(j["points"][1] == Json::array({1, 1}));
    CHECK(j["triangulations"]["half"][0] == "1/2");
    CHECK(j["zpoints"][0]["mlog"][2] == "5");
    auto c = parse_config(j);
    CHECK(c.policy.bound == 14);
    CHECK(c.zpoints.size() == 1);
  }
  SUBCASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_toml("a = 1\nb ~ 2\n"), doctest::Contains("line 2"), gkz_error);
    CHECK_THROWS_WITH_AS(parse_toml("a = [1, 2\n"), doctest::Contains("line 1"), gkz_error);
    CHECK_THROWS_WITH_AS(parse_toml("a = \"oops\n"), doctest::Contains("line 1"), gkz_error);
  }
}

TEST_CASE("loading from disk matches across formats") {
  std::string jp = write_temp("gkz_cli_test.json", a1_json().dump());
  std::string tp = write_temp("gkz_cli_test.toml", R"(name = "a1"
points = [[1, 0], [1, 1], [1, 2]]
height = [1, 0]

[triangulations]
fine = [0, -1, 0]
coarse = [0, 1, 0]

[flips]
resolution = ["fine", "coarse"]
)");
  auto cj = load_config(jp);
  auto ct = load_config(tp);
  CHECK(resolved_config(cj).dump() == resolved_config(ct).dump());
  CHECK_THROWS_WITH_AS(load_config("/no/such/file.json"), doctest::Contains("cannot open"),
                       gkz_error);
  std::remove(jp.c_str());
  std::remove(tp.c_str());
}

TEST_CASE("info reports the combinatorial data") {
  auto c = parse_config(a1_json());
  Json out = cmd_info(c);
  CHECK(out["volume"] == 2);
  CHECK(out["n"] == 3);
  CHECK(out["L_basis"] == Json::array({Json::array({1, -2, 1})}));
  CHECK(out["triangulations"]["fine"]["sr_dimension"] == 2);
  CHECK(out["triangulations"]["coarse"]["sr_dimension"] == 2);
  CHECK(out["triangulations"]["fine"]["box"].size() == 1);
  CHECK(out["triangulations"]["coarse"]["box"].size() == 2);
  CHECK(out["triangulations"]["coarse"]["box"][1]["v"] == Json::array({1, 1}));
  CHECK(out["config"]["name"] == "a1");
}

TEST_CASE("solve evaluates the series") {
  auto c = parse_config(a1_json());
  SUBCASE("synthesized deep point") {
    Json out = cmd_solve(c, "fine", 0);
    CHECK(out["z_synthesized"] == true);
    CHECK(out["solutions"].size() == 2);
    CHECK(out["tail"].get<double>() < 1e-10);
    // the unit coordinate of the series at the unit functional is 1 + O(z)
    CHECK(std::abs(out["solutions"][0][0].get<double>() - 1.0) < 1e-6);
    // the SR-valued series is an independent cross-check of the same sum
    CHECK(out["sr_values"].size() == 2);
  }
  SUBCASE("unknown triangulation") {
    CHECK_THROWS_AS(cmd_solve(c, "nope", 0), gkz_error);
  }
  SUBCASE("outside the domain") {
    // deep in the coarse domain, hence outside the fine one
    Json j = a1_json();
    j["zpoints"] = Json::array(
        {Json{{"mlog", {"-2", "4", "-2"}}, {"arg_pi", {"-1/2", "-1/2", "-1/2"}}}});
    auto c2 = parse_config(j);
    CHECK_THROWS_WITH_AS(cmd_solve(c2, "fine", 0), doctest::Contains("outside"), gkz_error);
    Json out = cmd_solve(c2, "coarse", 0);
    CHECK(out["z_synthesized"] == false);
    CHECK(out["solutions"].size() == 2);
  }
  SUBCASE("missing point index") {
    CHECK_THROWS_WITH_AS(cmd_solve(c, "fine", 3), doctest::Contains("index"), gkz_error);
  }
}

TEST_CASE("verify passes and is byte-identical") {
  auto c = parse_config(a1_json());
  Json first = cmd_verify(c, "resolution");
  CHECK(first["pass"] == true);
  CHECK(first["dimensions"]["pass"] == true);
  CHECK(first["lemmas"]["pass"] == true);
  CHECK(first["correspondence"]["order"] == 2);
  CHECK(first["correspondence"]["roots"] == Json::array({"0", "1/2"}));
  CHECK(first["diagram"]["pass"] == true);
  CHECK(first["diagram"]["samples"].size() == 3);
  for (auto& s : first["diagram"]["samples"]) CHECK(s["delta"].get<double>() < 1e-6);

  Json second = cmd_verify(c, "resolution");
  CHECK(first.dump() == second.dump());

  CHECK_THROWS_WITH_AS(cmd_verify(c, "nope"), doctest::Contains("unknown flip"), gkz_error);

  ConfigFile bad = c;
  bad.policy.negative_control = true;
  Json neg = cmd_verify(bad, "resolution");
  CHECK(neg["pass"] == false);
  CHECK(neg["diagram"]["negative_control"] == true);
}
