#include "support.hpp"

#include "gspline/error.hpp"
#include "gspline/spline.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gspline;
using namespace testing;

namespace {

const RingDescriptor Z = RingDescriptor::integers();

Factor prime(long long p) { return make_factor(Integer(p), 1, Z); }

EdgeLabeledGraph random_graph(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices), coin(0, 99);
  const long long labels[] = {0, 2, 3, 5, 6, 7, 10, 12, 15, 21, 35, 49, 30};
  std::uniform_int_distribution<int> pick(0, 12);
  const int n = nv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<E> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng) < 50) edges.push_back({names[a], names[b], labels[pick(rng)]});
    }
  }
  return int_graph(names, edges);
}

/// Independent check over Z/n: the splines allowed by two parallel labels
/// equal those allowed by their merged label.
std::size_t count_two_vertex(long long n, const std::vector<long long>& labels) {
  std::size_t count = 0;
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      bool ok = true;
      for (long long l : labels) {
        bool in_ideal = false;
        for (long long t = 0; t < n && !in_ideal; ++t) in_ideal = (l * t - (a - b)) % n == 0;
        ok = ok && in_ideal;
      }
      if (ok) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("normalize merges parallel edges by intersection") {
  const EdgeLabeledGraph g = int_graph({"u", "v"}, {{"u", "v", 5}, {"v", "u", 7}});
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].label == int_label(35));
  CHECK(count_two_vertex(105, {5, 7}) == count_two_vertex(105, {35}));

  const EdgeLabeledGraph h = int_graph({"u", "v"}, {{"u", "v", 6}, {"u", "v", 4}});
  CHECK(h.edges()[0].label == int_label(12));
  const EdgeLabeledGraph z = int_graph({"u", "v"}, {{"u", "v", 0}, {"u", "v", 4}});
  CHECK(z.edges()[0].label.is_zero);
}

TEST_CASE("normalize drops self-loops and rejects bad input") {
  CHECK(int_graph({"u"}, {{"u", "u", 3}}).edge_count() == 0);
  try {
    int_graph({"u", "v"}, {{"u", "w", 3}});
    FAIL("expected UnknownVertex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
  CHECK_THROWS_AS(int_graph({"u", "u"}, {}), Error);
  CHECK_THROWS_AS(int_graph({""}, {}), Error);
  RawGraph raw;
  raw.ring = RingDescriptor::polynomials({"x"});
  raw.vertices = {"u", "v"};
  raw.edges.push_back({"u", "v", int_label(3)});
  try {
    normalize(raw);
    FAIL("expected MixedRings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedRings);
  }
}

TEST_CASE("normalize is idempotent") {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    const EdgeLabeledGraph g = random_graph(rng, 6);
    CHECK(normalize(g.to_raw()) == g);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(triangle()).size() == 1);
  const EdgeLabeledGraph t = int_graph({"u", "v", "w", "x"}, {{"u", "v", 3}, {"v", "w", 5}, {"u", "w", 7}});
  const auto parts = connected_components(t);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices() == std::vector<std::string>{"u", "v", "w"});
  CHECK(parts[1].vertices() == std::vector<std::string>{"x"});
  CHECK(connected_components(int_graph({}, {})).empty());
}

TEST_CASE("classification") {
  std::vector<std::string> cycle;
  CHECK(classify(triangle(), &cycle) == RestrictionClass::DeterminedByCycle);
  CHECK(cycle == std::vector<std::string>{"u", "v", "w"});
  CHECK(classify(int_graph({"a", "b", "c"}, {})) == RestrictionClass::Trivial);
  CHECK(classify(int_graph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 2}})) == RestrictionClass::Other);
  // Two disjoint triangles are two cycles.
  const EdgeLabeledGraph two = int_graph({"a", "b", "c", "d", "e", "f"},
                                         {{"a", "b", 2}, {"b", "c", 2}, {"a", "c", 2}, {"d", "e", 2}, {"e", "f", 2}, {"d", "f", 2}});
  CHECK(classify(two) == RestrictionClass::Other);
  // A cycle plus isolated vertices still counts.
  CHECK(classify(int_graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "d", 2}, {"a", "d", 2}})) ==
        RestrictionClass::DeterminedByCycle);
}

TEST_CASE("restrict the triangle at 3") {
  const RestrictionOutcome r = restrict(triangle(), {prime(3)});
  CHECK(r.classification == RestrictionClass::Other);
  REQUIRE(r.trivialized.size() == 1);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.ring().inverted.size() == 1);
}

TEST_CASE("restrict the integer hexagons") {
  const EdgeLabeledGraph g = load_fixture("hexagons_int.json");
  const RestrictionOutcome partial = restrict(g, {prime(3), prime(5)});
  // Hexagon three keeps its cofactors, hexagons one and two keep theirs too.
  CHECK(partial.classification == RestrictionClass::Other);
  CHECK(partial.trivialized.size() == 2);  // the k = 1 edges of hexagons one and two
  const RestrictionOutcome full = restrict(g, {prime(3), prime(5), prime(2), prime(11), prime(13)});
  CHECK(full.classification == RestrictionClass::DeterminedByCycle);
  CHECK(full.trivialized.size() == 12);
  CHECK(full.cycle == std::vector<std::string>{"a3", "b3", "c3", "d3", "e3", "f3"});
  for (const auto& e : full.graph.edges()) CHECK(e.label == int_label(7));
}

TEST_CASE("restrict inverting everything is trivial; ModInt is unsupported") {
  const RestrictionOutcome r = restrict(triangle(), {prime(3), prime(5), prime(7)});
  CHECK(r.classification == RestrictionClass::Trivial);
  CHECK(r.trivialized.size() == 3);
  CHECK_THROWS_AS(restrict(over_modulus(triangle(), 15), {prime(3)}), Error);
}

TEST_CASE("restrict with nothing inverted") {
  const RestrictionOutcome r = restrict(triangle(), {});
  CHECK(r.graph == triangle());
  CHECK(r.classification == classify(triangle()));
}

TEST_CASE("restrict is functorial and accounts for every edge") {
  std::mt19937 rng(9);
  const long long primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 200; ++i) {
    const EdgeLabeledGraph g = random_graph(rng, 6);
    std::vector<Factor> s, t, both;
    for (long long p : primes) {
      if (coin(rng)) {
        s.push_back(prime(p));
        both.push_back(prime(p));
      }
      if (coin(rng)) {
        t.push_back(prime(p));
        both.push_back(prime(p));
      }
    }
    const RestrictionOutcome rs = restrict(g, s);
    const RestrictionOutcome rst = restrict(rs.graph, t);
    const RestrictionOutcome direct = restrict(g, both);
    CHECK(rst.graph == direct.graph);
    CHECK(rst.classification == direct.classification);
    CHECK(rs.graph.edge_count() + rs.trivialized.size() == g.edge_count());
  }
}

TEST_CASE("delete edge") {
  const EdgeLabeledGraph path = delete_edge(triangle(), "u", "v");
  CHECK(path.edge_count() == 2);
  CHECK(path.vertices() == triangle().vertices());
  const EdgeLabeledGraph two = int_graph({"u", "v"}, {{"u", "v", 3}});
  const EdgeLabeledGraph apart = delete_edge(two, "v", "u");
  CHECK(apart.edge_count() == 0);
  try {
    delete_edge(apart, "u", "v");
    FAIL("expected NoSuchEdge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchEdge);
  }
  CHECK(add_edge(path, "u", "v", int_label(3)) == triangle());
}

TEST_CASE("delete then re-add reproduces random graphs") {
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    const EdgeLabeledGraph g = random_graph(rng, 5);
    for (const auto& e : g.edges()) {
      const std::string& a = g.vertices()[e.u];
      const std::string& b = g.vertices()[e.v];
      CHECK(add_edge(delete_edge(g, a, b), a, b, e.label) == g);
    }
  }
}

TEST_CASE("delete vertex") {
  const EdgeLabeledGraph g = delete_vertex(triangle(), "w");
  CHECK(g.vertices() == std::vector<std::string>{"u", "v"});
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].label == int_label(3));
  const EdgeLabeledGraph iso = int_graph({"u", "v", "x"}, {{"u", "v", 3}});
  CHECK(delete_vertex(iso, "x") == int_graph({"u", "v"}, {{"u", "v", 3}}));
  const EdgeLabeledGraph empty = delete_vertex(int_graph({"u"}, {}), "u");
  CHECK(empty.vertex_count() == 0);
  try {
    delete_vertex(empty, "u");
    FAIL("expected NoSuchVertex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchVertex);
  }
}

TEST_CASE("contract edge") {
  const EdgeLabeledGraph c = contract_edge(triangle(), "u", "v");
  CHECK(c.vertices() == std::vector<std::string>{"u~v", "w"});
  REQUIRE(c.edge_count() == 1);
  CHECK(c.edges()[0].label == int_label(35));
  CHECK(c.merged_from().at("u~v") == std::vector<std::string>{"u", "v"});

  const EdgeLabeledGraph p = contract_edge(int_graph({"u", "v", "w"}, {{"u", "v", 3}, {"v", "w", 5}}), "u", "v");
  REQUIRE(p.edge_count() == 1);
  CHECK(p.edges()[0].label == int_label(5));

  const EdgeLabeledGraph one = contract_edge(int_graph({"u", "v"}, {{"u", "v", 3}}), "u", "v");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK_THROWS_AS(contract_edge(one, "u", "v"), Error);
}

TEST_CASE("contracting the triangle matches constant-on-{u,v} splines mod 105") {
  const EdgeLabeledGraph t = over_modulus(triangle(), 105);
  const EdgeLabeledGraph c = over_modulus(contract_edge(triangle(), "u", "v"), 105);
  // Triangle splines with s(u) = s(v), projected to (s(u), s(w)).
  std::vector<std::uint64_t> projected;
  for (std::uint64_t code : enumerate_codes(t)) {
    const std::uint64_t u = code / (105 * 105), v = (code / 105) % 105, w = code % 105;
    if (u == v) projected.push_back(u * 105 + w);
  }
  CHECK(projected == enumerate_codes(c));
}

TEST_CASE("contraction never grows the graph") {
  std::mt19937 rng(6);
  for (int i = 0; i < 100; ++i) {
    const EdgeLabeledGraph g = random_graph(rng, 6);
    for (const auto& e : g.edges()) {
      const EdgeLabeledGraph c = contract_edge(g, g.vertices()[e.u], g.vertices()[e.v]);
      CHECK(c.vertex_count() < g.vertex_count());
      CHECK(c.edge_count() < g.edge_count());
    }
  }
}

TEST_CASE("render text") {
  CHECK(render_text(triangle()) ==
        "ring: Int\nvertices: u v w\nedges: 3\n  u -- v : <3>\n  u -- w : <7>\n  v -- w : <5>\n");
}
