#include "doctest.h"

#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/pipeline.hpp"
#include "ifs_cstar/report.hpp"
#include "ifs_cstar/representation.hpp"
#include "support.hpp"

using namespace ifs_cstar;
using namespace testing_support;

namespace {

RunConfig small_config(const char* name) {
  RunConfig c = load_config_text(gallery_entry(name).config);
  c.trials = 5;
  return c;
}

}  // namespace

TEST_CASE("gallery configs load") {
  const RunConfig c = load_config_text(gallery_entry("cantor").config);
  CHECK(std::holds_alternative<CantorSpace>(c.ifs.space()));
  CHECK(c.ifs.map(1) == AffineMap::scalar(q("1/3"), 0));
  CHECK(c.ifs.map(2) == AffineMap::scalar(q("1/3"), q("2/3")));
  CHECK_FALSE(c.seeds.has_value());
  CHECK(c.depth == 3);
  REQUIRE(c.ifs.open_set());
  CHECK(to_string(c.ifs.open_set()->boxes.at(0)) == "(0,1)");
  const RunConfig h = load_config_text(gallery_entry("halfmaps").config);
  CHECK(h.ifs.map(2) == AffineMap::scalar(q("-1/2"), 1));
  CHECK_THROWS_AS(gallery_entry("nope"), ConfigError);
}

TEST_CASE("config errors") {
  const std::string head = R"({"space": {"type": "interval"}, "maps": )";
  CHECK_THROWS_AS(load_config_text(head + R"([["1/0", "0"]]})"), ParseError);
  CHECK_THROWS_AS(load_config_text(head + R"([["1/2", "0"]], "colour": 1})"), ConfigError);
  CHECK_THROWS_AS(load_config_text(head + R"([["1", "0"]]})"), ConfigError);
  CHECK_NOTHROW(load_config_text(head + R"([["1", "0"]], "allow_noncontractive": true})"));
  CHECK_THROWS_AS(load_config_text(head + R"([{"expr": "x^2"}]})"), ConfigError);
  CHECK_THROWS_AS(load_config_text(head + R"([["2/3", "2/3"]]})"), ConfigError);  // leaves [0,1]
  CHECK_THROWS_AS(load_config_text(head + R"([["1/2", "0"]], "depth": 0})"), ConfigError);
  CHECK_THROWS_AS(load_config_text(R"({"space": )"), ParseError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  CHECK(parse_seed_list("2/3, 1/5") == std::vector<Point>{pt("2/3"), pt("1/5")});
  CHECK(parse_point("(1/3,1/4)") == Point{q("1/3"), q("1/4")});
  CHECK_THROWS_AS(parse_point("(1/3,1/4"), ParseError);
}

TEST_CASE("auto seeds are reproducible and admissible") {
  const AffineIfs c = cantor();
  const auto a = auto_seeds(c, 2, 6, 7);
  CHECK(a == auto_seeds(c, 2, 6, 7));
  CHECK(a.size() == 2);
  CHECK(scan_seed_set(c, a, 6).kept == a);
  for (const auto& s : a) CHECK(s[0].get_den() <= 1000);
}

TEST_CASE("matrix entries serialise as integer pairs") {
  const auto b = OrbitBasis::build(cantor(), {pt("2/3")}, 1);
  SparseOp a(b);
  a.set(1, 0, ComplexRational(q("-2/3"), q("5/7")));
  const ojson j = entries_to_json(a);
  // Integers as strings so numerators and denominators of any size survive.
  CHECK(j.dump() == R"([[1,0,"-2","3","5","7"]])");
}

TEST_CASE("report round trip preserves exact values") {
  const Report r = run_pipeline(small_config("halfmaps"), RunOptions{});
  const ojson j = report_to_json(r);
  const Report back = report_from_json(nlohmann::json::parse(j.dump()));
  // Key order of the config echo is not preserved; compare as JSON values.
  CHECK(nlohmann::json::parse(report_to_json(back).dump()) == nlohmann::json::parse(j.dump()));
  REQUIRE(back.ledger);
  const auto& gs = *back.ledger->graph_separation;
  CHECK(gs.holds == Tri::no);
  CHECK(gs.witness_points.at(0) == pt("1"));
  REQUIRE(back.verdict);
  CHECK(back.verdict->masa == MasaVerdict::yes);
  CHECK(back.verdict->cartan == CartanVerdict::no);
}

TEST_CASE("rationals with large parts round trip through the ledger") {
  ConditionResult c;
  c.holds = Tri::no;
  c.witness_points = {Point{parse_rational("-123456789012345678901234567890/98765432109876543210987")}};
  c.witness_words = {IndexWord{2, 1}, IndexWord{}};
  const ConditionResult back = condition_from_json(nlohmann::json::parse(to_json(c).dump()));
  CHECK(back.witness_points == c.witness_points);
  CHECK(back.witness_words == c.witness_words);
  CHECK(back.holds == Tri::no);
}

TEST_CASE("reports are deterministic") {
  const RunConfig c = small_config("cantor");
  const std::string a = report_to_json(run_pipeline(c, RunOptions{})).dump(2);
  const std::string b = report_to_json(run_pipeline(c, RunOptions{})).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"measured\": false") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Report dup = run_pipeline(small_config("duplicate"), RunOptions{});
  CHECK(report_exit_code(dup, false) == 0);
  CHECK(report_exit_code(dup, true) == 4);
  Report bad = run_pipeline(small_config("cantor"), RunOptions{"check", false});
  CHECK(report_exit_code(bad, true) == 0);
  SuiteResult s{"identities"};
  s.invariant("unit").failed = 1;
  bad.suites.push_back(s);
  CHECK(report_exit_code(bad, false) == 3);
  CHECK(report_to_text(bad).find("unit") != std::string::npos);
}
