#include "gspline/geometry.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gspline {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

RingDescriptor base_of(const RingDescriptor& ring) {
  RingDescriptor base = ring;
  base.inverted.clear();
  return base;
}

bool has_factor(const FactoredElement& label, const Factor& p, const RingDescriptor& base) {
  if (label.is_zero) return true;
  return std::any_of(label.factors.begin(), label.factors.end(),
                     [&](const Factor& f) { return is_associate(f.element, p.element, base); });
}

Partition classes_of(UnionFind& uf, const std::vector<std::string>& names) {
  Partition out;
  std::vector<std::size_t> slot(names.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (slot[root] == names.size()) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(names[i]);
  }
  return out;
}

std::vector<Factor> relevant_factors(const EdgeLabeledGraph& g) {
  const RingDescriptor base = base_of(g.ring());
  std::vector<Factor> out;
  for (const auto& e : g.edges()) {
    for (const auto& f : e.label.factors) {
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const Factor& o) { return is_associate(o.element, f.element, base); });
      if (!seen) out.push_back({f.element, 1, f.irreducibility});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); });
  return out;
}

void finish(SpectrumReport& r, std::size_t vertex_count, UnionFind& glued) {
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < vertex_count; ++i) roots.insert(glued.find(i));
  r.components = roots.size();
  r.hole_count = r.links + r.components - vertex_count;
}

}  // namespace

Partition fiber_over(const EdgeLabeledGraph& g, const Factor& p) {
  const RingDescriptor base = base_of(g.ring());
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (has_factor(e.label, p, base)) uf.unite(e.u, e.v);
  }
  return classes_of(uf, g.vertices());
}

SpectrumReport spectrum_report(const EdgeLabeledGraph& g) {
  SpectrumReport r;
  r.ring = g.ring();
  r.vertices = g.vertices();
  UnionFind glued(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.label.is_zero) {
      r.fully_glued.emplace_back(g.vertices()[e.u], g.vertices()[e.v]);
      ++r.links;
    } else {
      r.links += e.label.factors.size();
    }
    if (!e.label.is_unit()) glued.unite(e.u, e.v);
  }
  for (const auto& p : relevant_factors(g)) r.fibers.push_back({p, fiber_over(g, p)});
  finish(r, g.vertex_count(), glued);
  return r;
}

BaseChangeCheck base_change_commutes(const EdgeLabeledGraph& g, const std::vector<Factor>& invert) {
  BaseChangeCheck out;
  const RestrictionOutcome restricted = restrict(g, invert);
  out.restricted = spectrum_report(restricted.graph);

  // Glue first, then delete the fibers over inverted factors and their links.
  const SpectrumReport full = spectrum_report(g);
  const RingDescriptor& ring = restricted.graph.ring();
  const RingDescriptor base = base_of(ring);
  auto inverted = [&](const RingElement& p) {
    return std::any_of(ring.inverted.begin(), ring.inverted.end(),
                       [&](const Factor& f) { return is_associate(f.element, p, base); });
  };
  SpectrumReport& pruned = out.pruned;
  pruned.ring = ring;
  pruned.vertices = full.vertices;
  pruned.fully_glued = full.fully_glued;
  for (const auto& f : full.fibers) {
    if (!inverted(f.prime.element)) pruned.fibers.push_back(f);
  }
  // Surviving links: the zero-label links plus, per surviving fiber, the
  // (edge, factor) pairs at that factor.
  UnionFind glued(g.vertex_count());
  pruned.links = 0;
  for (const auto& e : g.edges()) {
    if (e.label.is_zero) {
      ++pruned.links;
      glued.unite(e.u, e.v);
      continue;
    }
    for (const auto& f : e.label.factors) {
      if (inverted(f.element)) continue;
      ++pruned.links;
      glued.unite(e.u, e.v);
    }
  }
  finish(pruned, g.vertex_count(), glued);

  const SpectrumReport& a = out.restricted;
  if (a.fibers.size() != pruned.fibers.size()) {
    out.discrepancies.push_back("fiber count: restricted " + std::to_string(a.fibers.size()) + ", pruned " +
                                std::to_string(pruned.fibers.size()));
  } else {
    for (std::size_t i = 0; i < a.fibers.size(); ++i) {
      if (!(a.fibers[i].prime.element == pruned.fibers[i].prime.element)) {
        out.discrepancies.push_back("fiber " + std::to_string(i) + ": restricted at " +
                                    format_element(a.fibers[i].prime.element, base) + ", pruned at " +
                                    format_element(pruned.fibers[i].prime.element, base));
      } else if (a.fibers[i].classes != pruned.fibers[i].classes) {
        out.discrepancies.push_back("fiber at " + format_element(a.fibers[i].prime.element, base) + ": restricted " +
                                    format_partition(a.fibers[i].classes) + ", pruned " +
                                    format_partition(pruned.fibers[i].classes));
      }
    }
  }
  if (a.fully_glued != pruned.fully_glued) out.discrepancies.push_back("fully glued pairs differ");
  auto compare = [&](const char* what, std::size_t x, std::size_t y) {
    if (x != y) {
      out.discrepancies.push_back(std::string(what) + ": restricted " + std::to_string(x) + ", pruned " +
                                  std::to_string(y));
    }
  };
  compare("links", a.links, pruned.links);
  compare("components", a.components, pruned.components);
  compare("holeCount", a.hole_count, pruned.hole_count);
  out.commutes = out.discrepancies.empty();
  return out;
}

// --- diffs ------------------------------------------------------------------

namespace {

std::string edge_name(const EdgeLabeledGraph& g, const Edge& e) {
  return g.vertices()[e.u] + " -- " + g.vertices()[e.v];
}

const Edge* lookup(const EdgeLabeledGraph& g, const std::string& a, const std::string& b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) return nullptr;
  const std::size_t pos = g.find_edge(g.index_of(a), g.index_of(b));
  return pos == std::string::npos ? nullptr : &g.edges()[pos];
}

}  // namespace

SpectrumDiff spectrum_diff(const EdgeLabeledGraph& before, const EdgeLabeledGraph& after) {
  if (!before.ring().same_base(after.ring())) {
    throw Error(ErrorKind::UnrelatedGraphs,
                "graphs live over different rings: " + format_ring(before.ring()) + " and " + format_ring(after.ring()));
  }
  SpectrumDiff d;
  d.before = spectrum_report(before);
  d.after = spectrum_report(after);
  const RingDescriptor base = base_of(before.ring());

  std::vector<std::string> gone, fresh;
  for (const auto& v : before.vertices()) {
    if (!after.has_vertex(v)) gone.push_back(v);
  }
  for (const auto& v : after.vertices()) {
    if (!before.has_vertex(v)) fresh.push_back(v);
  }

  auto& out = d.narrative;
  if (gone.empty() && fresh.empty()) {
    d.operation = "delete-edge";
    for (const auto& e : before.edges()) {
      const Edge* other = lookup(after, before.vertices()[e.u], before.vertices()[e.v]);
      if (!other) {
        out.push_back("edge removed: " + edge_name(before, e) + " <" + format_factored(e.label, base) + ">");
      } else if (!(other->label == e.label)) {
        d.operation = "edit";
        out.push_back("label changed: " + edge_name(before, e) + " <" + format_factored(e.label, base) + "> -> <" +
                      format_factored(other->label, base) + ">");
      }
    }
    for (const auto& e : after.edges()) {
      if (!lookup(before, after.vertices()[e.u], after.vertices()[e.v])) {
        d.operation = "edit";
        out.push_back("edge added: " + edge_name(after, e) + " <" + format_factored(e.label, base) + ">");
      }
    }
  } else if (gone.size() == 1 && fresh.empty()) {
    d.operation = "delete-vertex";
    out.push_back("vertex removed: " + gone[0] + " (its copy of Spec(R) is dropped)");
  } else if (gone.size() == 2 && fresh.size() == 1 &&
             (fresh[0] == gone[0] + "~" + gone[1] || fresh[0] == gone[1] + "~" + gone[0])) {
    d.operation = "contract";
    out.push_back("vertices identified: " + gone[0] + ", " + gone[1] + " -> " + fresh[0]);
  } else {
    throw Error(ErrorKind::UnrelatedGraphs,
                "vertex sets differ by " + std::to_string(gone.size()) + " removed and " + std::to_string(fresh.size()) +
                    " added vertices; expected one deletion or one contraction");
  }

  // Per-factor gluing classes, over the union of relevant factors.
  std::vector<Factor> factors;
  for (const auto& f : d.before.fibers) factors.push_back(f.prime);
  for (const auto& f : d.after.fibers) {
    if (std::none_of(factors.begin(), factors.end(), [&](const Factor& o) { return o.element == f.prime.element; })) {
      factors.push_back(f.prime);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); });
  for (const auto& p : factors) {
    const Partition x = fiber_over(before, p), y = fiber_over(after, p);
    const std::string name = format_element(p.element, base);
    if (x == y) continue;
    std::string line = "fiber at " + name + ": " + format_partition(x) + " -> " + format_partition(y);
    if (y.size() > x.size()) line += " (" + std::to_string(y.size() - x.size()) + " gluing(s) removed)";
    out.push_back(line);
  }
  for (const auto& [a, b] : d.before.fully_glued) {
    if (std::find(d.after.fully_glued.begin(), d.after.fully_glued.end(), std::pair{a, b}) == d.after.fully_glued.end()) {
      out.push_back("full gluing removed: " + a + " -- " + b);
    }
  }

  std::string comp = "components: " + std::to_string(d.before.components) + " -> " + std::to_string(d.after.components);
  if (d.after.components > d.before.components) {
    comp += " (" + std::to_string(d.after.components - d.before.components) + " disconnected copy split off)";
  }
  out.push_back(comp);
  out.push_back("holeCount: " + std::to_string(d.before.hole_count) + " -> " + std::to_string(d.after.hole_count));
  return d;
}

// --- text -------------------------------------------------------------------

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += "{";
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ",";
      out += p[i][j];
    }
    out += "}";
  }
  return out;
}

std::string render_text(const SpectrumReport& r) {
  const RingDescriptor base = base_of(r.ring);
  std::ostringstream os;
  os << "ring: " << format_ring(r.ring) << "\n";
  os << "copies of Spec(R): " << r.vertices.size() << "\n";
  for (const auto& f : r.fibers) {
    os << "fiber at " << format_element(f.prime.element, base) << ": " << format_partition(f.classes) << " ("
       << f.classes.size() << " points)\n";
  }
  for (const auto& [a, b] : r.fully_glued) os << "fully glued pair: " << a << " -- " << b << "\n";
  os << "generic fiber: " << r.vertices.size() << " points, identified only along fully glued pairs\n";
  os << "links: " << r.links << "\n";
  os << "components: " << r.components << "\n";
  os << "holeCount: " << r.hole_count << "\n";
  return os.str();
}

std::string render_text(const SpectrumDiff& d) {
  std::ostringstream os;
  os << "operation: " << d.operation << "\n";
  for (const auto& line : d.narrative) os << line << "\n";
  return os.str();
}

std::string render_text(const BaseChangeCheck& c) {
  std::ostringstream os;
  os << "base change commutes: " << (c.commutes ? "yes" : "no") << "\n";
  for (const auto& line : c.discrepancies) os << "  " << line << "\n";
  return os.str();
}

}  // namespace gspline
