#pragma once

#include "gspline/graph.hpp"
#include "gspline/io.hpp"
#include "gspline/ring.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

using namespace gspline;

inline std::string fixture_path(const std::string& name) { return std::string(GSPLINE_FIXTURES) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline EdgeLabeledGraph load_fixture(const std::string& name) {
  return io::graph_from_json(io::parse_json(read_text(fixture_path(name)), name));
}

/// Factored integer label; 0 is the zero label and 1 the unit ideal.
inline FactoredElement int_label(long long value) {
  return factor_integer(Integer(value));
}

struct E {
  std::string a, b;
  long long label;
};

inline EdgeLabeledGraph int_graph(std::vector<std::string> vertices, const std::vector<E>& edges,
                                  RingDescriptor ring = RingDescriptor::integers()) {
  RawGraph raw;
  raw.ring = ring;
  raw.vertices = std::move(vertices);
  for (const auto& e : edges) raw.edges.push_back({e.a, e.b, int_label(e.label)});
  return normalize(raw);
}

inline EdgeLabeledGraph triangle() { return int_graph({"u", "v", "w"}, {{"u", "v", 3}, {"v", "w", 5}, {"u", "w", 7}}); }

inline RingElement poly(const std::string& text, const RingDescriptor& ring) { return parse_element(text, ring); }

}  // namespace testing
