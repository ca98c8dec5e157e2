#include "gspline/io.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <limits>

namespace gspline::io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, "field '" + where + "': " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string indexed(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

/// Ring in which factor strings are written: lifts to Z for ModInt.
RingDescriptor factor_ring(const RingDescriptor& ring) {
  if (ring.kind == RingKind::ModInt) return RingDescriptor::integers();
  RingDescriptor base = ring;
  base.inverted.clear();
  return base;
}

/// Prefixes an error message with the offending field, keeping the kind.
[[noreturn]] void rethrow_at(const Error& e, const std::string& where) {
  std::string what = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (what.starts_with(prefix)) what.erase(0, prefix.size());
  throw Error(e.kind(), "field '" + where + "': " + what);
}

RingElement parse_at(const std::string& text, const RingDescriptor& ring, const std::string& where) {
  try {
    return parse_element(text, ring);
  } catch (const Error& e) {
    rethrow_at(e, where);
  }
}

Factor factor_at(const std::string& text, unsigned mult, const RingDescriptor& ring, const std::string& where) {
  const RingDescriptor fr = factor_ring(ring);
  const RingElement e = parse_at(text, fr, where);
  try {
    return make_factor(e, mult, fr);
  } catch (const Error& err) {
    rethrow_at(err, where);
  }
}

Json modulus_json(const Integer& n) {
  if (n <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(n);
  return n.str();
}

Json partition_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& cls : p) out.push_back(cls);
  return out;
}

Json edge_json(const EdgeLabeledGraph& g, const Edge& e) {
  Json j;
  j["ends"] = {g.vertices()[e.u], g.vertices()[e.v]};
  j["label"] = to_json(e.label, g.ring());
  return j;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, source + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

// --- ring and labels --------------------------------------------------------

Json to_json(const RingDescriptor& ring) {
  Json j;
  switch (ring.kind) {
    case RingKind::Int: j["kind"] = "Int"; break;
    case RingKind::ModInt:
      j["kind"] = "ModInt";
      j["modulus"] = modulus_json(ring.modulus);
      break;
    case RingKind::PolyQ:
      j["kind"] = "PolyQ";
      j["variables"] = ring.variables;
      break;
  }
  if (!ring.inverted.empty()) {
    const RingDescriptor fr = factor_ring(ring);
    Json inv = Json::array();
    for (const auto& f : ring.inverted) inv.push_back(format_element(f.element, fr));
    j["inverted"] = inv;
  }
  return j;
}

RingDescriptor ring_from_json(const Json& j) {
  const std::string kind = string_at(field(j, "kind", "ring"), "ring.kind");
  RingDescriptor ring;
  if (kind == "Int") {
    ring = RingDescriptor::integers();
  } else if (kind == "ModInt") {
    const Json& m = field(j, "modulus", "ring");
    Integer n;
    if (m.is_number_integer()) {
      n = m.get<std::int64_t>();
    } else if (m.is_string()) {
      try {
        n = Integer(m.get<std::string>());
      } catch (const std::exception&) {
        schema("ring.modulus", "not an integer");
      }
    } else {
      schema("ring.modulus", "expected an integer");
    }
    if (n < 2) schema("ring.modulus", "must be at least 2");
    ring = RingDescriptor::integers_mod(n);
  } else if (kind == "PolyQ") {
    const Json& vars = array_at(field(j, "variables", "ring"), "ring.variables");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) names.push_back(string_at(vars[i], indexed("ring.variables", i)));
    ring = RingDescriptor::polynomials(names);
  } else {
    schema("ring.kind", "unknown ring kind '" + kind + "' (expected Int, ModInt or PolyQ)");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "kind" && it.key() != "modulus" && it.key() != "variables" && it.key() != "inverted") {
      schema("ring." + it.key(), "unknown field");
    }
  }
  if (auto it = j.find("inverted"); it != j.end()) {
    const Json& inv = array_at(*it, "ring.inverted");
    for (std::size_t i = 0; i < inv.size(); ++i) {
      const std::string where = indexed("ring.inverted", i);
      ring.inverted.push_back(factor_at(string_at(inv[i], where), 1, ring, where));
    }
  }
  try {
    ring.validate();
  } catch (const Error& e) {
    rethrow_at(e, "ring");
  }
  return ring;
}

Json to_json(const FactoredElement& label, const RingDescriptor& ring) {
  Json j;
  if (label.is_zero) {
    j["zero"] = true;
    return j;
  }
  const RingDescriptor fr = factor_ring(ring);
  Json factors = Json::array();
  for (const auto& f : label.factors) factors.push_back({format_element(f.element, fr), f.multiplicity});
  j["factors"] = factors;
  return j;
}

FactoredElement label_from_json(const Json& j, const RingDescriptor& ring, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  if (auto z = j.find("zero"); z != j.end()) {
    if (!z->is_boolean() || !z->get<bool>()) schema(join(where, "zero"), "must be true when present");
    if (j.contains("factors")) schema(where, "a label is either zero or factored, not both");
    return FactoredElement::zero();
  }
  const std::string fw = join(where, "factors");
  const Json& fs = array_at(field(j, "factors", where), fw);
  FactoredElement out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string w = indexed(fw, i);
    const Json& pair = fs[i];
    if (!pair.is_array() || pair.size() != 2) schema(w, "expected [factor, multiplicity]");
    if (!pair[1].is_number_integer() || pair[1].get<std::int64_t>() < 1 || pair[1].get<std::int64_t>() > 1000000) {
      schema(w + "[1]", "multiplicity must be a positive integer");
    }
    out.factors.push_back(factor_at(string_at(pair[0], w + "[0]"), pair[1].get<unsigned>(), ring, w + "[0]"));
  }
  return canonicalize(std::move(out), factor_ring(ring));
}

// --- graphs -----------------------------------------------------------------

Json to_json(const EdgeLabeledGraph& g) {
  Json j;
  j["ring"] = to_json(g.ring());
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(g, e));
  j["edges"] = edges;
  if (!g.merged_from().empty()) {
    Json merged = Json::object();
    for (const auto& v : g.vertices()) {
      if (auto it = g.merged_from().find(v); it != g.merged_from().end()) merged[v] = it->second;
    }
    j["merged"] = merged;
  }
  return j;
}

RawGraph raw_graph_from_json(const Json& j) {
  if (!j.is_object()) schema("", "graph must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "ring" && it.key() != "vertices" && it.key() != "edges" && it.key() != "merged") {
      schema(it.key(), "unknown field");
    }
  }
  RawGraph raw;
  raw.ring = ring_from_json(field(j, "ring", ""));
  const Json& vs = array_at(field(j, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) raw.vertices.push_back(string_at(vs[i], indexed("vertices", i)));
  const Json& es = array_at(field(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string w = indexed("edges", i);
    const Json& ends = array_at(field(es[i], "ends", w), w + ".ends");
    if (ends.size() != 2) schema(w + ".ends", "expected two vertex names");
    RawEdge e;
    e.a = string_at(ends[0], w + ".ends[0]");
    e.b = string_at(ends[1], w + ".ends[1]");
    e.label = label_from_json(field(es[i], "label", w), raw.ring, w + ".label");
    raw.edges.push_back(std::move(e));
  }
  if (auto it = j.find("merged"); it != j.end()) {
    if (!it->is_object()) schema("merged", "expected an object");
    for (auto m = it->begin(); m != it->end(); ++m) {
      const Json& names = array_at(m.value(), "merged." + m.key());
      std::vector<std::string> originals;
      for (std::size_t i = 0; i < names.size(); ++i) originals.push_back(string_at(names[i], indexed("merged." + m.key(), i)));
      raw.merged_from[m.key()] = std::move(originals);
    }
  }
  return raw;
}

EdgeLabeledGraph graph_from_json(const Json& j) { return normalize(raw_graph_from_json(j)); }

// --- opens ------------------------------------------------------------------

Json to_json(const std::vector<BasicOpen>& opens, const RingDescriptor& ring) {
  const RingDescriptor fr = factor_ring(ring);
  Json list = Json::array();
  for (const auto& o : opens) {
    Json inv = Json::array();
    for (const auto& f : o.invert) inv.push_back(format_element(f.element, fr));
    list.push_back({{"name", o.name}, {"invert", inv}});
  }
  return {{"opens", list}};
}

std::vector<BasicOpen> opens_from_json(const Json& j, const RingDescriptor& ring) {
  const Json& list = array_at(field(j, "opens", ""), "opens");
  if (list.empty()) schema("opens", "at least one open is required");
  const RingDescriptor fr = factor_ring(ring);
  std::vector<BasicOpen> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = indexed("opens", i);
    const std::string name = string_at(field(list[i], "name", w), w + ".name");
    const Json& inv = array_at(field(list[i], "invert", w), w + ".invert");
    std::vector<RingElement> elements;
    for (std::size_t k = 0; k < inv.size(); ++k) {
      const std::string wk = indexed(w + ".invert", k);
      elements.push_back(parse_at(string_at(inv[k], wk), fr, wk));
    }
    try {
      out.push_back(make_open(name, elements, ring));
    } catch (const Error& e) {
      rethrow_at(e, w);
    }
  }
  return out;
}

// --- modules ------------------------------------------------------------------

Json to_json(const SplineModule& m) {
  Json j;
  Json order = Json::array();
  for (std::size_t i : m.vertex_order) order.push_back(m.vertices[i]);
  j["vertexOrder"] = order;
  Json basis = Json::array();
  for (const auto& b : m.basis) {
    Json row = Json::object();
    for (std::size_t i = 0; i < m.vertices.size(); ++i) row[m.vertices[i]] = format_element(b.values[i], m.ring);
    basis.push_back(row);
  }
  j["basis"] = basis;
  j["vertices"] = m.vertices;
  return j;
}

SplineModule module_from_json(const Json& j, const RingDescriptor& ring) {
  SplineModule m;
  m.ring = ring;
  const Json& order = array_at(field(j, "vertexOrder", ""), "vertexOrder");
  std::vector<std::string> order_names;
  for (std::size_t i = 0; i < order.size(); ++i) order_names.push_back(string_at(order[i], indexed("vertexOrder", i)));
  if (auto it = j.find("vertices"); it != j.end()) {
    const Json& vs = array_at(*it, "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) m.vertices.push_back(string_at(vs[i], indexed("vertices", i)));
  } else {
    m.vertices = order_names;
  }
  for (const auto& name : order_names) {
    auto it = std::find(m.vertices.begin(), m.vertices.end(), name);
    if (it == m.vertices.end()) schema("vertexOrder", "unknown vertex '" + name + "'");
    m.vertex_order.push_back(static_cast<std::size_t>(it - m.vertices.begin()));
  }
  if (m.vertex_order.size() != m.vertices.size()) schema("vertexOrder", "must list every vertex once");
  const Json& basis = array_at(field(j, "basis", ""), "basis");
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::string w = indexed("basis", b);
    Spline s;
    for (const auto& v : m.vertices) {
      s.values.push_back(parse_at(string_at(field(basis[b], v, w), join(w, v)), ring, join(w, v)));
    }
    std::size_t pos = 0;
    while (pos < m.vertices.size() && s.values[m.vertex_order[pos]].is_zero()) ++pos;
    if (pos == m.vertices.size()) schema(w, "zero basis element");
    m.pivots.push_back(pos);
    m.leading.push_back(s.values[m.vertex_order[pos]]);
    m.basis.push_back(std::move(s));
  }
  return m;
}

Json to_json(const LimitTrace& t, const RingDescriptor& ring) {
  const RingDescriptor solve = solving_ring(ring);
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j;
    if (s.kind == LimitStep::Kind::LeafPullback) {
      j["kind"] = "pullback";
      j["vertex"] = s.first;
      j["attachedTo"] = s.second;
    } else {
      j["kind"] = "equalizer";
      j["ends"] = {s.first, s.second};
    }
    j["label"] = to_json(s.label, ring);
    j["vertices"] = s.vertices;
    Json gens = Json::array();
    for (const auto& row : s.generators) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(format_element(e, solve));
      gens.push_back(r);
    }
    j["generators"] = gens;
    steps.push_back(j);
  }
  return {{"start", t.start}, {"steps", steps}};
}

// --- geometry -----------------------------------------------------------------

Json to_json(const SpectrumReport& r) {
  const RingDescriptor fr = factor_ring(r.ring);
  Json fibers = Json::object();
  for (const auto& f : r.fibers) fibers[format_element(f.prime.element, fr)] = partition_json(f.classes);
  Json j;
  j["fibers"] = fibers;
  j["holeCount"] = r.hole_count;
  j["components"] = r.components;
  j["links"] = r.links;
  Json glued = Json::array();
  for (const auto& [a, b] : r.fully_glued) glued.push_back({a, b});
  j["fullyGlued"] = glued;
  j["vertices"] = r.vertices;
  j["ring"] = to_json(r.ring);
  return j;
}

SpectrumReport report_from_json(const Json& j, const RingDescriptor& ring) {
  SpectrumReport r;
  r.ring = ring;
  const Json& fibers = field(j, "fibers", "");
  if (!fibers.is_object()) schema("fibers", "expected an object");
  for (auto it = fibers.begin(); it != fibers.end(); ++it) {
    const std::string w = "fibers." + it.key();
    Fiber f{factor_at(it.key(), 1, ring, w), {}};
    const Json& classes = array_at(it.value(), w);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Json& cls = array_at(classes[c], indexed(w, c));
      std::vector<std::string> names;
      for (std::size_t k = 0; k < cls.size(); ++k) names.push_back(string_at(cls[k], indexed(indexed(w, c), k)));
      f.classes.push_back(std::move(names));
    }
    r.fibers.push_back(std::move(f));
  }
  auto count = [&](const char* key) {
    const Json& v = field(j, key, "");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      schema(key, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
  };
  r.hole_count = count("holeCount");
  r.components = count("components");
  if (j.contains("links")) r.links = count("links");
  if (auto it = j.find("fullyGlued"); it != j.end()) {
    const Json& pairs = array_at(*it, "fullyGlued");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Json& p = array_at(pairs[i], indexed("fullyGlued", i));
      if (p.size() != 2) schema(indexed("fullyGlued", i), "expected a pair");
      r.fully_glued.emplace_back(string_at(p[0], indexed("fullyGlued", i)), string_at(p[1], indexed("fullyGlued", i)));
    }
  }
  if (auto it = j.find("vertices"); it != j.end()) {
    const Json& vs = array_at(*it, "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) r.vertices.push_back(string_at(vs[i], indexed("vertices", i)));
  }
  return r;
}

Json to_json(const SpectrumDiff& d) {
  return {{"operation", d.operation}, {"before", to_json(d.before)}, {"after", to_json(d.after)}, {"narrative", d.narrative}};
}

Json to_json(const BaseChangeCheck& c) {
  return {{"commutes", c.commutes},
          {"restricted", to_json(c.restricted)},
          {"pruned", to_json(c.pruned)},
          {"discrepancies", c.discrepancies}};
}

Json to_json(const RestrictionOutcome& r) {
  Json trivialized = Json::array();
  for (const auto& e : r.trivialized) trivialized.push_back(edge_json(r.graph, e));
  Json j;
  j["graph"] = to_json(r.graph);
  j["trivialized"] = trivialized;
  j["classification"] = to_string(r.classification);
  j["cycle"] = r.cycle;
  return j;
}

Json to_json(const CertificateReport& r) {
  const RingDescriptor fr = factor_ring(r.ring);
  Json opens = Json::array();
  for (const auto& o : r.opens) {
    Json inv = Json::array();
    for (const auto& f : o.invert) inv.push_back(format_element(f.element, fr));
    Json trivialized = Json::array();
    for (const auto& e : o.outcome.trivialized) {
      trivialized.push_back({o.outcome.graph.vertices()[e.u], o.outcome.graph.vertices()[e.v]});
    }
    opens.push_back({{"name", o.name},
                     {"invert", inv},
                     {"classification", to_string(o.outcome.classification)},
                     {"trivialized", trivialized},
                     {"cycle", o.outcome.cycle}});
  }
  Json cover;
  cover["status"] = to_string(r.cover.kind);
  if (r.cover.common_factor) cover["commonFactor"] = format_element(*r.cover.common_factor, fr);
  if (!r.cover.reason.empty()) cover["reason"] = r.cover.reason;
  if (!r.cover.witness.empty()) cover["witness"] = r.cover.witness;
  Json j;
  j["ring"] = to_json(r.ring);
  j["perOpen"] = opens;
  j["coverStatus"] = cover;
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  return j;
}

}  // namespace gspline::io
