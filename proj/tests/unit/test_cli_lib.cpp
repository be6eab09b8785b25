// Parsing, validation and deterministic formatting behind the command line
// tool (no subprocesses here; the binary itself is driven in the cli-binary
// suite).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polder_cli/config.hpp"
#include "polder_cli/format.hpp"

using namespace polder::cli;

TEST_SUITE("cli") {

TEST_CASE("angle parsing defaults to degrees") {
  CHECK(parse_angle("30") == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-15));
  CHECK(parse_angle("30deg") == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-15));
  CHECK(parse_angle("0.5rad") == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(parse_angle("-90deg") == doctest::Approx(-std::numbers::pi / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle("fast"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("30stone"), std::invalid_argument);
}

TEST_CASE("grid parsing") {
  const GridSpec g = parse_grid("0:5:51");
  CHECK(g.start == 0.0);
  CHECK(g.stop == 5.0);
  CHECK(g.count == 51);
  const auto pts = g.points();
  REQUIRE(pts.size() == 51);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 5.0);
  CHECK(pts[10] == doctest::Approx(1.0).epsilon(1e-15));

  const GridSpec single = parse_grid("2.5");
  CHECK(single.count == 1);
  REQUIRE(single.points().size() == 1);
  CHECK(single.points()[0] == 2.5);

  CHECK_THROWS_AS(parse_grid("0:5:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:1"), std::invalid_argument);  // one point needs start == stop
  CHECK_NOTHROW(parse_grid("3:3:1"));
  CHECK_THROWS_AS(parse_grid("0:5:2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
}

TEST_CASE("angle list parsing") {
  const auto v = parse_angle_list("0,45,90");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_list("10,,20"), std::invalid_argument);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.command = "energy";
  CHECK_NOTHROW(validate(cfg));

  RunConfig bad = cfg;
  bad.a = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.geometry = "disc";
  bad.b = 0.9;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.geometry = "torus";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.pol = "diagonal";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.kernel = "pauli";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.quad.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.engage = "sometimes";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("canonical config and its hash are stable") {
  RunConfig cfg;
  cfg.command = "energy";
  const std::string c1 = canonical_config(cfg);
  const std::string c2 = canonical_config(cfg);
  CHECK(c1 == c2);
  CHECK(nlohmann::json::parse(c1).at("command") == "energy");

  const std::string h1 = config_hash(cfg);
  CHECK(h1.size() == 16);
  CHECK(h1.find_first_not_of("0123456789abcdef") == std::string::npos);

  RunConfig other = cfg;
  other.theta = 0.25;
  CHECK(config_hash(other) != h1);
}

TEST_CASE("17 significant digits round-trip doubles") {
  for (double v : {std::numbers::pi, 1.0 / 3.0, 1e-300, -2.5e17, 0.1, 0.0}) {
    CHECK(std::stod(fmt17(v)) == v);
  }
}

TEST_CASE("csv fields quote only when needed") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("with,comma") == "\"with,comma\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("FNV-1a matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
  CHECK(hex64(0x1ULL) == "0000000000000001");
}

TEST_CASE("json writer emits well-formed documents") {
  JsonWriter w;
  w.begin_object();
  w.kv("name", "ring \"test\"\n");
  w.kv("value", 1.5);
  w.kv("count", 3);
  w.kv("flag", true);
  w.key("list").begin_array().value(1.0).value(2.0).end_array();
  w.end_object();
  const auto j = nlohmann::json::parse(w.str());
  CHECK(j.at("name") == "ring \"test\"\n");
  CHECK(j.at("value") == 1.5);
  CHECK(j.at("count") == 3);
  CHECK(j.at("flag") == true);
  CHECK(j.at("list").size() == 2);
}

}  // TEST_SUITE
