#include <cmath>
#include <limits>

#include "cforge/complex.hpp"
#include "cforge/corridor_process.hpp"
#include "cforge/errors.hpp"
#include "cforge/pm_process.hpp"
#include "cforge/rng.hpp"
#include "cforge/serialize.hpp"
#include "doctest.h"

using namespace cforge;
using nlohmann::json;

namespace {

ProcessConfig config(Vertex n, int d, std::uint64_t seed) {
  ProcessConfig c;
  c.n = n;
  c.d = d;
  c.seed = seed;
  c.record_every = 7;
  c.track_random = 4;
  return c;
}

}  // namespace

TEST_CASE("complex documents round-trip") {
  const auto x = boundary_corridor(2, 6);
  const json doc = io::complex_to_json(x, 2);
  CHECK(doc.at("facets").size() == 8);
  CHECK(doc.at("facets")[0] == json::array({1, 2, 3}));
  const auto back = io::complex_from_json(json::parse(io::dump(doc)));
  CHECK(back.complex == x);
  CHECK(back.d == 2);
}

TEST_CASE("malformed complex documents are rejected") {
  CHECK_THROWS_AS(io::complex_from_json(json{{"n", 5}, {"d", 2}}), FormatError);
  CHECK_THROWS_AS(io::complex_from_json(json{{"n", 5}, {"d", 2}, {"facets", {{1, 1, 2}}}}), FormatError);
  CHECK_THROWS_AS(io::complex_from_json(json{{"n", 3}, {"d", 2}, {"facets", {{1, 2, 4}}}}), FormatError);
  CHECK_THROWS_AS(io::complex_from_json(json{{"n", 3}, {"d", 2}, {"facets", {{0, 1, 2}}}}), FormatError);
  CHECK_THROWS_AS(io::complex_from_json(json{{"n", "five"}, {"d", 2}, {"facets", json::array()}}), FormatError);
}

TEST_CASE("real numbers format to their shortest exact text") {
  CHECK(io::format_real(0.25) == "0.25");
  CHECK(io::format_real(0.1) == "0.1");
  CHECK(io::format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(std::isinf(io::parse_real("inf")));
  CHECK_THROWS_AS(io::parse_real("1.5x"), FormatError);
  CHECK_THROWS_AS(io::parse_real(""), FormatError);
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const double x = (rng.uniform_unit() - 0.5) * std::pow(10.0, static_cast<double>(rng.uniform_below(40)) - 20);
    CHECK(io::parse_real(io::format_real(x)) == x);
  }
}

TEST_CASE("corridor reports round-trip and validate") {
  const auto r = corridor::run(config(30, 2, 4));
  const json doc = io::report_to_json(r);
  CHECK_NOTHROW(io::validate(doc, io::DocumentKind::kCorridorReport));
  CHECK(doc.at("passed") == true);
  const auto back = io::corridor_report_from_json(json::parse(io::dump(doc)));
  CHECK(back == r);
  CHECK(io::dump(io::report_to_json(back)) == io::dump(doc));

  json broken = doc;
  broken.erase("steps");
  CHECK_THROWS_AS(io::corridor_report_from_json(broken), FormatError);
  broken = doc;
  broken["termination"] = "bored";
  CHECK_THROWS_AS(io::corridor_report_from_json(broken), FormatError);
  broken = doc;
  broken["trajectory"][0]["samples"][0]["w"][0] = -1;
  CHECK_FALSE(io::schema_violations(broken, io::schema(io::DocumentKind::kCorridorReport)).empty());
}

TEST_CASE("pm reports round-trip and validate") {
  const auto r = pm::run(config(26, 2, 8));
  const json doc = io::report_to_json(r);
  CHECK_NOTHROW(io::validate(doc, io::DocumentKind::kPmReport));
  CHECK(doc.at("pseudomanifold") == true);
  CHECK(io::pm_report_from_json(json::parse(io::dump(doc))) == r);
  CHECK_THROWS_AS(io::pm_report_from_json(io::report_to_json(corridor::run(config(30, 2, 4)))), FormatError);
}

TEST_CASE("trajectory CSV round-trips") {
  for (int d = 2; d <= 3; ++d) {
    const auto r = corridor::run(config(30, d, 5));
    const int period = Regime::corridor(d).period;
    const std::string text = io::trajectory_csv(r.trajectory, period);
    const auto header = text.substr(0, text.find('\n'));
    std::string want = "step,t,p,A_id,size_A,Y_obs,Y_pred,band";
    for (int j = 0; j < period; ++j) want += ",W_" + std::to_string(j);
    for (int j = 0; j < period; ++j) want += ",Z_" + std::to_string(j);
    CHECK(header == want);
    CHECK(io::parse_trajectory_csv(text) == r.trajectory);
    CHECK(io::trajectory_csv(io::parse_trajectory_csv(text), period) == text);
  }
  const auto p = pm::run(config(26, 2, 1));
  const std::string text = io::trajectory_csv(p.trajectory, Regime::pseudomanifold(2).period);
  CHECK(io::parse_trajectory_csv(text) == p.trajectory);
  CHECK_THROWS_AS(io::parse_trajectory_csv("nonsense\n"), FormatError);
  CHECK_THROWS_AS(io::parse_trajectory_csv(""), FormatError);
}

TEST_CASE("embedded schemas match the shipped files") {
  const std::string root = CFORGE_SOURCE_DIR;
  CHECK(json::parse(io::read_file(root + "/schema/complex.schema.json")) == io::schema(io::DocumentKind::kComplex));
  CHECK(json::parse(io::read_file(root + "/schema/corridor_report.schema.json")) ==
        io::schema(io::DocumentKind::kCorridorReport));
  CHECK(json::parse(io::read_file(root + "/schema/pm_report.schema.json")) ==
        io::schema(io::DocumentKind::kPmReport));
}

TEST_CASE("schema subset semantics") {
  const json s = json::parse(R"({"type": "object", "required": ["a"],
    "properties": {"a": {"type": ["integer", "null"], "minimum": 2},
                   "b": {"type": "array", "items": {"enum": ["x", "y"]}}}})");
  CHECK(io::schema_violations(json{{"a", 3}}, s).empty());
  CHECK(io::schema_violations(json{{"a", nullptr}}, s).empty());
  CHECK(io::schema_violations(json{{"a", 1}}, s).size() == 1);
  CHECK(io::schema_violations(json{{"a", 2.5}}, s).size() == 1);
  CHECK(io::schema_violations(json{{"b", {"x"}}}, s).size() == 1);
  CHECK(io::schema_violations(json{{"a", 2}, {"b", {"x", "z"}}}, s).size() == 1);
  CHECK(io::schema_violations(json::array(), s).size() == 1);
}
