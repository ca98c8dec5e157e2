#pragma once

#include "gspline/graph.hpp"
#include "gspline/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gspline {

/// Vertex classes (names), each in declaration order, classes ordered by
/// their first vertex.
using Partition = std::vector<std::vector<std::string>>;

struct Fiber {
  Factor prime;  // multiplicity 1
  Partition classes;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Combinatorial picture of Spec(R_G): |V| copies of Spec(R) glued along
/// the label loci. One gluing link per (edge, factor) pair of a nonzero
/// label and one per zero-label edge.
struct SpectrumReport {
  RingDescriptor ring;
  std::vector<std::string> vertices;
  std::vector<Fiber> fibers;  // one per relevant factor, canonical order
  std::vector<std::pair<std::string, std::string>> fully_glued;  // zero-label edges
  std::size_t links = 0;
  std::size_t components = 0;
  std::size_t hole_count = 0;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Connected components of the subgraph of edges whose label has p as a
/// factor (zero labels count as divisible by every p).
Partition fiber_over(const EdgeLabeledGraph& g, const Factor& p);

SpectrumReport spectrum_report(const EdgeLabeledGraph& g);

struct BaseChangeCheck {
  bool commutes = false;
  SpectrumReport restricted;  // report of the restricted graph
  SpectrumReport pruned;      // original report with inverted fibers removed
  std::vector<std::string> discrepancies;
};

/// Compares "restrict, then glue" with "glue, then drop the inverted fibers".
BaseChangeCheck base_change_commutes(const EdgeLabeledGraph& g, const std::vector<Factor>& invert);

struct SpectrumDiff {
  std::string operation;  // "delete-edge", "delete-vertex", "contract" or "edit"
  SpectrumReport before;
  SpectrumReport after;
  std::vector<std::string> narrative;
};

/// Infers the graph operation from the vertex sets and narrates the change.
/// Throws UnrelatedGraphs when no single operation explains the vertex sets.
SpectrumDiff spectrum_diff(const EdgeLabeledGraph& before, const EdgeLabeledGraph& after);

std::string format_partition(const Partition& p);
std::string render_text(const SpectrumReport& r);
std::string render_text(const SpectrumDiff& d);
std::string render_text(const BaseChangeCheck& c);

}  // namespace gspline
