#pragma once

#include "gspline/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace gspline {

/// Edge between two vertex indices. After normalization u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  FactoredElement label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Graph description as read from input, before hygiene.
struct RawEdge {
  std::string a, b;
  FactoredElement label;
};

struct RawGraph {
  RingDescriptor ring;
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
  std::map<std::string, std::vector<std::string>> merged_from;
};

/// Simple undirected graph with factored principal-ideal labels. Edges are
/// kept sorted by (u, v); parallel edges are merged and self-loops dropped.
class EdgeLabeledGraph {
 public:
  EdgeLabeledGraph() = default;

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Original vertex names behind each contracted vertex ("u~v").
  const std::map<std::string, std::vector<std::string>>& merged_from() const { return merged_from_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Index of a vertex name; throws NoSuchVertex.
  std::size_t index_of(const std::string& name) const;
  bool has_vertex(const std::string& name) const;
  /// Position of the edge {a, b} in edges(), or npos.
  std::size_t find_edge(std::size_t a, std::size_t b) const;

  RawGraph to_raw() const;

  friend bool operator==(const EdgeLabeledGraph&, const EdgeLabeledGraph&) = default;

 private:
  friend EdgeLabeledGraph normalize(const RawGraph& raw);

  RingDescriptor ring_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<std::string>> merged_from_;
};

/// Label of the intersection of two principal ideals: factorwise max
/// multiplicity, with the zero ideal absorbing.
FactoredElement intersect_labels(const FactoredElement& a, const FactoredElement& b,
                                 const RingDescriptor& ring);

/// Input hygiene: validates names, drops self-loops, merges parallel edges.
EdgeLabeledGraph normalize(const RawGraph& raw);

std::vector<EdgeLabeledGraph> connected_components(const EdgeLabeledGraph& g);

/// Vertex partition into connected components (indices in vertex order).
std::vector<std::vector<std::size_t>> component_partition(std::size_t vertex_count,
                                                          const std::vector<Edge>& edges);

enum class RestrictionClass { Trivial, DeterminedByCycle, Other };

const char* to_string(RestrictionClass c);

struct RestrictionOutcome {
  EdgeLabeledGraph graph;            // over the localized ring
  std::vector<Edge> trivialized;     // original edges whose ideal became the unit ideal
  RestrictionClass classification = RestrictionClass::Other;
  std::vector<std::string> cycle;    // cycle vertices in traversal order (DeterminedByCycle only)
};

/// Classifies the edge set of a graph: no edges, exactly one cycle through
/// >= 3 vertices with every other vertex isolated, or anything else.
RestrictionClass classify(const EdgeLabeledGraph& g, std::vector<std::string>* cycle = nullptr);

/// Restriction to the basic open where `invert` becomes a unit.
RestrictionOutcome restrict(const EdgeLabeledGraph& g, const std::vector<Factor>& invert);

EdgeLabeledGraph delete_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v);
EdgeLabeledGraph delete_vertex(const EdgeLabeledGraph& g, const std::string& u);
/// Merges u and v into "u~v" at the earlier of their positions.
EdgeLabeledGraph contract_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v);
/// Adds (or intersects into an existing) edge.
EdgeLabeledGraph add_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v,
                          const FactoredElement& label);

/// Same vertices and labels, reinterpreted over Z/n (labels must be integer).
EdgeLabeledGraph over_modulus(const EdgeLabeledGraph& g, const Integer& n);

std::string render_text(const EdgeLabeledGraph& g);

}  // namespace gspline
