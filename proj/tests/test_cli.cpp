#include "support.hpp"

#include "gspline/cli.hpp"
#include "gspline/spline.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gspline;
using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return fixture_path(name); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gspline_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("basis text output") {
  const Run r = run({"basis", fixture("triangle.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "ring: Int\nrank: 3\n  u  v   w\n  1  1   1\n  0  3  28\n  0  0  35\n");
  const Run inc = run({"basis", fixture("triangle.json"), "--incremental"});
  CHECK(inc.code == 0);
  CHECK(inc.out.find("step 3: equalizer: v -- w along <5>") != std::string::npos);
  CHECK(inc.out.ends_with(r.out));
}

TEST_CASE("basis JSON round-trips through the library") {
  const Run r = run({"basis", fixture("triangle.json"), "--json"});
  REQUIRE(r.code == 0);
  const SplineModule m = io::module_from_json(io::parse_json(r.out, "stdout"), RingDescriptor::integers());
  CHECK(m == solve_direct(triangle()));
}

TEST_CASE("vertex order option") {
  const Run r = run({"basis", fixture("triangle.json"), "--vertex-order", "w,v,u", "--json"});
  REQUIRE(r.code == 0);
  const io::Json j = io::parse_json(r.out, "stdout");
  CHECK(j["vertexOrder"] == io::Json::array({"w", "v", "u"}));
  CHECK(run({"basis", fixture("triangle.json"), "--vertex-order", "w,v"}).code == 2);
}

TEST_CASE("verify") {
  const Run r = run({"verify", fixture("path.json"), "--mod", "15"});
  CHECK(r.code == 0);
  CHECK(r.out == "brute force = direct = incremental: 225 splines\n");
  CHECK(run({"verify", fixture("triangle.json"), "--mod", "105"}).out ==
        "brute force = direct = incremental: 11025 splines\n");
  const Run big = run({"verify", fixture("triangle.json"), "--mod", "100000"});
  CHECK(big.code == 1);
  CHECK(big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("spectrum and diff commands") {
  const Run s = run({"spectrum", fixture("triangle.json")});
  CHECK(s.code == 0);
  CHECK(s.out.find("fiber at 3: {u,v} {w} (2 points)") != std::string::npos);
  CHECK(s.out.find("holeCount: 1") != std::string::npos);

  const Run sj = run({"spectrum", fixture("triangle.json"), "--json"});
  REQUIRE(sj.code == 0);
  const SpectrumReport back = io::report_from_json(io::parse_json(sj.out, "stdout"), RingDescriptor::integers());
  CHECK(back == spectrum_report(triangle()));

  const Run d = run({"delete-edge", fixture("triangle.json"), "u", "v", "--emit-diff"});
  CHECK(d.code == 0);
  CHECK(d.out.find("holeCount: 1 -> 0") != std::string::npos);

  const Run c = run({"contract", fixture("triangle.json"), "u", "v", "--json"});
  REQUIRE(c.code == 0);
  const std::string contracted = write_temp("contracted.json", c.out);
  CHECK(io::graph_from_json(io::parse_json(c.out, "stdout")) == contract_edge(triangle(), "u", "v"));
  const Run diff = run({"diff", fixture("triangle.json"), contracted});
  CHECK(diff.code == 0);
  CHECK(diff.out.find("operation: contract") != std::string::npos);

  const Run unrelated = run({"diff", fixture("triangle.json"), fixture("hexagons_int.json")});
  CHECK(unrelated.code == 2);
}

TEST_CASE("restrict, cover and certify") {
  const Run r = run({"restrict", fixture("triangle.json"), "--invert", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("classification: Other\n"));

  const Run c = run({"cover", fixture("triangle.json"), "--opens", fixture("opens_int.json")});
  CHECK(c.code == 0);
  CHECK(c.out == "cover: Covers (gcd of the products is 1)\n");

  const Run t = run({"certify", fixture("triangle.json"), "--opens", fixture("opens_triangle.json")});
  CHECK(t.code == 0);
  CHECK(t.out.ends_with("verdict: UNKNOWN\n"));

  const Run h = run({"certify", fixture("hexagons_poly.json"), "--opens", fixture("opens_poly.json"), "--json"});
  CHECK(h.code == 0);
  const io::Json j = io::parse_json(h.out, "stdout");
  CHECK(j["coverStatus"]["status"] == "Inconclusive");
  CHECK(j["verdict"] == "UNKNOWN");
  REQUIRE(j["perOpen"].size() == 3);
  for (const auto& o : j["perOpen"]) CHECK(o["classification"] == "DeterminedByCycle");
}

TEST_CASE("exit codes") {
  CHECK(run({"basis", "--bogus", fixture("triangle.json")}).code == 2);
  CHECK(run({"basis", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const std::string broken = write_temp("broken.json", R"({"ring":{"kind":"Int"},"vertices":["u"],"edges":[)");
  const Run b = run({"basis", broken});
  CHECK(b.code == 2);
  CHECK(b.err.find("Schema") != std::string::npos);
  const Run poly = run({"basis", fixture("hexagons_poly.json")});
  CHECK(poly.code == 1);
  CHECK(poly.err.find("UnsupportedRing") != std::string::npos);
  CHECK(run({"delete-edge", fixture("triangle.json"), "u", "q"}).code == 2);
  CHECK(run({"delete-vertex", fixture("triangle.json"), "q"}).code == 2);
  const Run inc = run({"basis", fixture("edgeless.json"), "--incremental"});
  CHECK(inc.code == 0);
  CHECK(inc.out.find("rank: 3") != std::string::npos);
}
