#include "gspline/graph.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gspline {

const char* to_string(RestrictionClass c) {
  switch (c) {
    case RestrictionClass::Trivial: return "Trivial";
    case RestrictionClass::DeterminedByCycle: return "DeterminedByCycle";
    case RestrictionClass::Other: return "Other";
  }
  return "Other";
}

std::size_t EdgeLabeledGraph::index_of(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw Error(ErrorKind::NoSuchVertex, "no vertex named '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool EdgeLabeledGraph::has_vertex(const std::string& name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

std::size_t EdgeLabeledGraph::find_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == a && edges_[i].v == b) return i;
  }
  return std::string::npos;
}

RawGraph EdgeLabeledGraph::to_raw() const {
  RawGraph raw{ring_, vertices_, {}, merged_from_};
  for (const auto& e : edges_) raw.edges.push_back({vertices_[e.u], vertices_[e.v], e.label});
  return raw;
}

FactoredElement intersect_labels(const FactoredElement& a, const FactoredElement& b,
                                 const RingDescriptor& ring) {
  if (a.is_zero || b.is_zero) return FactoredElement::zero();
  FactoredElement out = canonicalize(a, ring);
  for (const auto& f : canonicalize(b, ring).factors) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const Factor& o) { return o.element == f.element; });
    if (it == out.factors.end()) out.factors.push_back(f);
    else it->multiplicity = std::max(it->multiplicity, f.multiplicity);
  }
  return canonicalize(std::move(out), ring);
}

namespace {

void check_label_ring(const FactoredElement& label, const RingDescriptor& ring) {
  for (const auto& f : label.factors) {
    const bool ok = ring.kind == RingKind::PolyQ
                        ? f.element.is_polynomial() && f.element.polynomial().nvars() == ring.variables.size()
                        : f.element.is_integer();
    if (!ok) throw Error(ErrorKind::MixedRings, "edge label factor does not belong to " + format_ring(ring));
  }
}

std::vector<Factor> canonical_inverted(std::vector<Factor> inv, const RingDescriptor& ring) {
  for (auto& f : inv) {
    f.element = normalize_associate(f.element, ring);
    f.multiplicity = 1;
  }
  std::sort(inv.begin(), inv.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); });
  inv.erase(std::unique(inv.begin(), inv.end(),
                        [](const Factor& a, const Factor& b) { return a.element == b.element; }),
            inv.end());
  return inv;
}

}  // namespace

EdgeLabeledGraph normalize(const RawGraph& raw) {
  EdgeLabeledGraph g;
  g.ring_ = raw.ring;
  g.ring_.inverted = canonical_inverted(raw.ring.inverted, raw.ring);
  g.ring_.validate();

  std::set<std::string> seen;
  for (const auto& name : raw.vertices) {
    if (name.empty()) throw Error(ErrorKind::Schema, "empty vertex name");
    if (!seen.insert(name).second) throw Error(ErrorKind::Schema, "duplicate vertex '" + name + "'");
  }
  g.vertices_ = raw.vertices;

  auto lookup = [&](const std::string& name) {
    auto it = std::find(g.vertices_.begin(), g.vertices_.end(), name);
    if (it == g.vertices_.end()) throw Error(ErrorKind::UnknownVertex, "edge endpoint '" + name + "' is not a vertex");
    return static_cast<std::size_t>(it - g.vertices_.begin());
  };

  std::map<std::pair<std::size_t, std::size_t>, FactoredElement> merged;
  for (const auto& e : raw.edges) {
    std::size_t a = lookup(e.a), b = lookup(e.b);
    check_label_ring(e.label, g.ring_);
    if (a == b) continue;  // s(u) - s(u) = 0 lies in every ideal
    if (a > b) std::swap(a, b);
    FactoredElement label = canonicalize(e.label, g.ring_);
    auto [it, inserted] = merged.emplace(std::make_pair(a, b), label);
    if (!inserted) it->second = intersect_labels(it->second, label, g.ring_);
  }
  for (auto& [ends, label] : merged) g.edges_.push_back({ends.first, ends.second, std::move(label)});

  for (const auto& [name, originals] : raw.merged_from) {
    if (seen.count(name)) g.merged_from_[name] = originals;
  }
  return g;
}

std::vector<std::vector<std::size_t>> component_partition(std::size_t vertex_count,
                                                          const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < vertex_count; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeLabeledGraph> connected_components(const EdgeLabeledGraph& g) {
  std::vector<EdgeLabeledGraph> out;
  for (const auto& members : component_partition(g.vertex_count(), g.edges())) {
    RawGraph raw{g.ring(), {}, {}, g.merged_from()};
    std::set<std::size_t> in(members.begin(), members.end());
    for (std::size_t i : members) raw.vertices.push_back(g.vertices()[i]);
    for (const auto& e : g.edges()) {
      if (in.count(e.u)) raw.edges.push_back({g.vertices()[e.u], g.vertices()[e.v], e.label});
    }
    out.push_back(normalize(raw));
  }
  return out;
}

RestrictionClass classify(const EdgeLabeledGraph& g, std::vector<std::string>* cycle) {
  if (cycle) cycle->clear();
  const auto& edges = g.edges();
  if (edges.empty()) return RestrictionClass::Trivial;
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t touched = 0, start = g.vertex_count();
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (adj[i].empty()) continue;
    if (adj[i].size() != 2) return RestrictionClass::Other;
    ++touched;
    start = std::min(start, i);
  }
  if (touched < 3 || touched != edges.size()) return RestrictionClass::Other;
  // Walk the cycle; with all degrees 2 it is one cycle iff the walk sees every touched vertex.
  std::vector<std::size_t> order{start};
  std::size_t prev = start, cur = std::min(adj[start][0], adj[start][1]);
  while (cur != start) {
    order.push_back(cur);
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != touched) return RestrictionClass::Other;
  if (cycle) {
    for (std::size_t i : order) cycle->push_back(g.vertices()[i]);
  }
  return RestrictionClass::DeterminedByCycle;
}

RestrictionOutcome restrict(const EdgeLabeledGraph& g, const std::vector<Factor>& invert) {
  if (g.ring().kind == RingKind::ModInt) {
    throw Error(ErrorKind::UnsupportedRing, "restriction needs Int or PolyQ, got " + format_ring(g.ring()));
  }
  RingDescriptor base = g.ring();
  base.inverted.clear();
  RawGraph raw = g.to_raw();
  std::vector<Factor> all = g.ring().inverted;
  for (const auto& f : invert) {
    all.push_back(make_factor(f.element, 1, base));
  }
  raw.ring.inverted = all;
  raw.edges.clear();

  RestrictionOutcome out;
  RingDescriptor localized = base;
  localized.inverted = all;
  for (const auto& e : g.edges()) {
    if (trivializes(e.label, localized)) {
      out.trivialized.push_back(e);
      continue;
    }
    FactoredElement label = e.label;
    std::erase_if(label.factors, [&](const Factor& f) {
      return std::any_of(all.begin(), all.end(),
                         [&](const Factor& inv) { return is_associate(f.element, inv.element, base); });
    });
    raw.edges.push_back({g.vertices()[e.u], g.vertices()[e.v], std::move(label)});
  }
  out.graph = normalize(raw);
  out.classification = classify(out.graph, &out.cycle);
  return out;
}

EdgeLabeledGraph delete_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw Error(ErrorKind::NoSuchEdge, "no edge " + u + " -- " + v);
  }
  const std::size_t pos = g.find_edge(g.index_of(u), g.index_of(v));
  if (pos == std::string::npos) throw Error(ErrorKind::NoSuchEdge, "no edge " + u + " -- " + v);
  RawGraph raw = g.to_raw();
  raw.edges.erase(raw.edges.begin() + static_cast<std::ptrdiff_t>(pos));
  return normalize(raw);
}

EdgeLabeledGraph delete_vertex(const EdgeLabeledGraph& g, const std::string& u) {
  if (!g.has_vertex(u)) throw Error(ErrorKind::NoSuchVertex, "no vertex named '" + u + "'");
  RawGraph raw = g.to_raw();
  std::erase(raw.vertices, u);
  std::erase_if(raw.edges, [&](const RawEdge& e) { return e.a == u || e.b == u; });
  raw.merged_from.erase(u);
  return normalize(raw);
}

EdgeLabeledGraph contract_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v) {
  if (!g.has_vertex(u) || !g.has_vertex(v) || g.find_edge(g.index_of(u), g.index_of(v)) == std::string::npos) {
    throw Error(ErrorKind::NoSuchEdge, "no edge " + u + " -- " + v);
  }
  const std::string merged = u + "~" + v;
  if (g.has_vertex(merged)) throw Error(ErrorKind::Schema, "vertex name '" + merged + "' already in use");

  auto originals = [&](const std::string& name) {
    auto it = g.merged_from().find(name);
    return it == g.merged_from().end() ? std::vector<std::string>{name} : it->second;
  };
  RawGraph raw = g.to_raw();
  std::vector<std::string> names = originals(u);
  for (auto& n : originals(v)) names.push_back(n);
  raw.merged_from.erase(u);
  raw.merged_from.erase(v);
  raw.merged_from[merged] = names;

  const std::size_t keep = std::min(g.index_of(u), g.index_of(v));
  raw.vertices.clear();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& name = g.vertices()[i];
    if (i == keep) raw.vertices.push_back(merged);
    else if (name != u && name != v) raw.vertices.push_back(name);
  }
  for (auto& e : raw.edges) {
    if (e.a == u || e.a == v) e.a = merged;
    if (e.b == u || e.b == v) e.b = merged;
  }
  return normalize(raw);
}

EdgeLabeledGraph add_edge(const EdgeLabeledGraph& g, const std::string& u, const std::string& v,
                          const FactoredElement& label) {
  RawGraph raw = g.to_raw();
  raw.edges.push_back({u, v, label});
  return normalize(raw);
}

EdgeLabeledGraph over_modulus(const EdgeLabeledGraph& g, const Integer& n) {
  if (g.ring().kind == RingKind::PolyQ || g.ring().is_localized()) {
    throw Error(ErrorKind::UnsupportedRing, "only integer graphs can be read modulo n, got " + format_ring(g.ring()));
  }
  RawGraph raw = g.to_raw();
  raw.ring = RingDescriptor::integers_mod(n);
  return normalize(raw);
}

std::string render_text(const EdgeLabeledGraph& g) {
  std::ostringstream os;
  os << "ring: " << format_ring(g.ring()) << "\n";
  os << "vertices:";
  for (const auto& v : g.vertices()) os << " " << v;
  os << "\n";
  os << "edges: " << g.edge_count() << "\n";
  for (const auto& e : g.edges()) {
    os << "  " << g.vertices()[e.u] << " -- " << g.vertices()[e.v] << " : <"
       << format_factored(e.label, g.ring()) << ">\n";
  }
  for (const auto& [name, originals] : g.merged_from()) {
    os << "merged " << name << " from";
    for (const auto& o : originals) os << " " << o;
    os << "\n";
  }
  return os.str();
}

}  // namespace gspline
