#include "gspline/cli.hpp"

#include "gspline/certificate.hpp"
#include "gspline/error.hpp"
#include "gspline/geometry.hpp"
#include "gspline/io.hpp"
#include "gspline/spline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gspline::cli {

namespace {

using io::Json;

struct Options {
  std::string input, second, opens;
  std::string u, v;
  bool json = false, text = false;
  bool incremental = false, emit_diff = false;
  std::string vertex_order;
  std::string modulus;
  std::vector<std::string> invert;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Schema, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EdgeLabeledGraph load_graph(const std::string& path) {
  try {
    return io::graph_from_json(io::parse_json(read_file(path), path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.kind())).size() + 2));
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part.erase(0, part.find_first_not_of(" \t"));
      part.erase(part.find_last_not_of(" \t") + 1);
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> parse_vertex_order(const EdgeLabeledGraph& g, const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  std::vector<std::size_t> order;
  for (const auto& name : split_list({spec})) {
    if (!g.has_vertex(name)) throw Error(ErrorKind::Schema, "--vertex-order: unknown vertex '" + name + "'");
    order.push_back(g.index_of(name));
  }
  return order;
}

/// Incremental construction per connected component, recombined.
std::pair<SplineModule, std::vector<LimitTrace>> incremental(const EdgeLabeledGraph& g,
                                                             std::optional<std::vector<std::size_t>> order) {
  std::vector<LimitTrace> traces;
  if (component_partition(g.vertex_count(), g.edges()).size() <= 1) {
    auto [m, t] = build_incremental(g, default_edge_order(g), std::move(order));
    traces.push_back(std::move(t));
    return {std::move(m), std::move(traces)};
  }
  GeneratorMatrix gens;
  for (const auto& part : connected_components(g)) {
    auto [m, t] = build_incremental(part, default_edge_order(part));
    traces.push_back(std::move(t));
    for (const auto& b : m.basis) {
      std::vector<RingElement> row(g.vertex_count(), g.ring().kind == RingKind::ModInt ? RingElement(Integer(0))
                                                                                        : solving_ring(g.ring()).zero());
      for (std::size_t i = 0; i < part.vertex_count(); ++i) row[g.index_of(part.vertices()[i])] = b.values[i];
      gens.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> identity(g.vertex_count());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return {flow_up_normalize(g.ring(), g.vertices(), std::move(gens), order ? *order : identity), std::move(traces)};
}

std::vector<Factor> parse_invert(const EdgeLabeledGraph& g, const std::vector<std::string>& items) {
  const std::vector<std::string> parts = split_list(items);
  if (parts.empty()) throw Error(ErrorKind::Schema, "--invert: at least one factor is required");
  RingDescriptor base = g.ring();
  base.inverted.clear();
  std::vector<RingElement> elements;
  for (const auto& p : parts) elements.push_back(parse_element(p, base));
  return make_open("invert", elements, base).invert;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const EdgeLabeledGraph g = load_graph(o.input);
  const auto order = parse_vertex_order(g, o.vertex_order);
  if (!o.incremental) {
    const SplineModule m = solve_direct(g, order);
    if (o.json) out << io::to_json(m).dump(2) << "\n";
    else out << render_text(m);
    return 0;
  }
  auto [m, traces] = incremental(g, order);
  if (o.json) {
    Json j = io::to_json(m);
    Json t = Json::array();
    for (const auto& tr : traces) t.push_back(io::to_json(tr, g.ring()));
    j["trace"] = t;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& tr : traces) out << render_text(tr, g.ring());
    out << render_text(m);
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  EdgeLabeledGraph g = load_graph(o.input);
  if (!o.modulus.empty()) {
    Integer n;
    try {
      n = Integer(o.modulus);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Schema, "--mod: '" + o.modulus + "' is not an integer");
    }
    if (n < 2) throw Error(ErrorKind::Schema, "--mod: modulus must be at least 2");
    if (g.ring().kind == RingKind::ModInt && g.ring().modulus != n) {
      throw Error(ErrorKind::Schema, "--mod " + o.modulus + " conflicts with the graph's ring " + format_ring(g.ring()));
    }
    if (g.ring().kind == RingKind::Int) g = over_modulus(g, n);
  }
  if (g.ring().kind != RingKind::ModInt) {
    throw Error(ErrorKind::UnsupportedRing, "verify needs --mod n for an Int graph or a ModInt graph, got " +
                                                format_ring(g.ring()));
  }
  const auto brute = enumerate_codes(g);
  const auto direct = span_codes(solve_direct(g));
  const auto incr = span_codes(incremental(g, std::nullopt).first);
  const bool agree = brute == direct && direct == incr;
  if (o.json) {
    Json j;
    j["modulus"] = g.ring().modulus.str();
    j["bruteForce"] = brute.size();
    j["direct"] = direct.size();
    j["incremental"] = incr.size();
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else if (agree) {
    out << "brute force = direct = incremental: " << brute.size() << " splines\n";
  } else {
    out << "disagreement: brute force " << brute.size() << ", direct " << direct.size() << ", incremental "
        << incr.size() << " splines" << (brute.size() == direct.size() ? " (same count, different sets)" : "") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  const EdgeLabeledGraph g = load_graph(o.input);
  const RestrictionOutcome r = restrict(g, parse_invert(g, o.invert));
  if (o.json) {
    out << io::to_json(r).dump(2) << "\n";
    return 0;
  }
  out << "classification: " << to_string(r.classification) << "\n";
  if (!r.cycle.empty()) {
    out << "cycle:";
    for (const auto& v : r.cycle) out << " " << v;
    out << "\n";
  }
  out << "trivialized edges: " << r.trivialized.size() << "\n";
  for (const auto& e : r.trivialized) {
    out << "  " << g.vertices()[e.u] << " -- " << g.vertices()[e.v] << " : <" << format_factored(e.label, g.ring())
        << ">\n";
  }
  out << render_text(r.graph);
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const SpectrumReport r = spectrum_report(load_graph(o.input));
  if (o.json) out << io::to_json(r).dump(2) << "\n";
  else out << render_text(r);
  return 0;
}

std::vector<BasicOpen> load_opens(const Options& o, const EdgeLabeledGraph& g) {
  try {
    return io::opens_from_json(io::parse_json(read_file(o.opens), o.opens), g.ring());
  } catch (const Error& e) {
    throw Error(e.kind(), o.opens + ": " + std::string(e.what()).substr(std::string(to_string(e.kind())).size() + 2));
  }
}

int cmd_cover(const Options& o, std::ostream& out) {
  const EdgeLabeledGraph g = load_graph(o.input);
  const CoverStatus c = check_cover(g.ring(), load_opens(o, g));
  if (o.json) {
    Json j;
    j["status"] = to_string(c.kind);
    RingDescriptor base = g.ring().kind == RingKind::ModInt ? RingDescriptor::integers() : g.ring();
    base.inverted.clear();
    if (c.common_factor) j["commonFactor"] = format_element(*c.common_factor, base);
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (!c.witness.empty()) j["witness"] = c.witness;
    out << j.dump(2) << "\n";
  } else {
    out << "cover: " << render_text(c, g.ring()) << "\n";
  }
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const EdgeLabeledGraph g = load_graph(o.input);
  const CertificateReport r = verify_certificate(g, load_opens(o, g));
  if (o.json) out << io::to_json(r).dump(2) << "\n";
  else out << render_text(r);
  return 0;
}

int emit_graph_op(const Options& o, std::ostream& out, const EdgeLabeledGraph& before, const EdgeLabeledGraph& after) {
  if (o.json) {
    if (o.emit_diff) {
      Json j;
      j["graph"] = io::to_json(after);
      j["diff"] = io::to_json(spectrum_diff(before, after));
      out << j.dump(2) << "\n";
    } else {
      out << io::to_json(after).dump(2) << "\n";
    }
    return 0;
  }
  out << render_text(after);
  if (o.emit_diff) out << render_text(spectrum_diff(before, after));
  return 0;
}

int cmd_diff(const Options& o, std::ostream& out) {
  const SpectrumDiff d = spectrum_diff(load_graph(o.input), load_graph(o.second));
  if (o.json) out << io::to_json(d).dump(2) << "\n";
  else out << render_text(d);
  return 0;
}

void format_flags(CLI::App* sub, Options& o) {
  auto* j = sub->add_flag("--json", o.json, "JSON output");
  auto* t = sub->add_flag("--text", o.text, "text output (default)");
  j->excludes(t);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized splines on edge-labeled graphs", "gspline"};
  app.require_subcommand(1, 1);
  Options o;

  auto* basis = app.add_subcommand("basis", "flow-up basis of the spline module");
  basis->add_option("graph", o.input, "graph JSON file")->required();
  basis->add_flag("--incremental", o.incremental, "build as pullbacks and equalizers and print the trace");
  basis->add_option("--vertex-order", o.vertex_order, "comma-separated column order");
  format_flags(basis, o);

  auto* verify = app.add_subcommand("verify", "compare brute force, direct solve and incremental build mod n");
  verify->add_option("graph", o.input, "graph JSON file")->required();
  verify->add_option("--mod", o.modulus, "modulus n (required for Int graphs)");
  format_flags(verify, o);

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict to the open where the given factors are units");
  restrict_cmd->add_option("graph", o.input, "graph JSON file")->required();
  restrict_cmd->add_option("--invert", o.invert, "factors to invert (comma-separated or repeated)")->required();
  format_flags(restrict_cmd, o);

  auto* spectrum = app.add_subcommand("spectrum", "fibers, gluing links, components and holes");
  spectrum->add_option("graph", o.input, "graph JSON file")->required();
  format_flags(spectrum, o);

  auto* cover = app.add_subcommand("cover", "check that the opens cover Spec(R)");
  cover->add_option("graph", o.input, "graph JSON file")->required();
  cover->add_option("--opens", o.opens, "opens JSON file")->required();
  format_flags(cover, o);

  auto* certify = app.add_subcommand("certify", "verify the local-freeness certificate");
  certify->add_option("graph", o.input, "graph JSON file")->required();
  certify->add_option("--opens", o.opens, "opens JSON file")->required();
  format_flags(certify, o);

  auto* del_edge = app.add_subcommand("delete-edge", "delete the edge u -- v");
  del_edge->add_option("graph", o.input, "graph JSON file")->required();
  del_edge->add_option("u", o.u, "first endpoint")->required();
  del_edge->add_option("v", o.v, "second endpoint")->required();
  del_edge->add_flag("--emit-diff", o.emit_diff, "also print the spectrum diff");
  format_flags(del_edge, o);

  auto* del_vertex = app.add_subcommand("delete-vertex", "delete a vertex and its edges");
  del_vertex->add_option("graph", o.input, "graph JSON file")->required();
  del_vertex->add_option("u", o.u, "vertex")->required();
  del_vertex->add_flag("--emit-diff", o.emit_diff, "also print the spectrum diff");
  format_flags(del_vertex, o);

  auto* contract = app.add_subcommand("contract", "contract the edge u -- v into u~v");
  contract->add_option("graph", o.input, "graph JSON file")->required();
  contract->add_option("u", o.u, "first endpoint")->required();
  contract->add_option("v", o.v, "second endpoint")->required();
  contract->add_flag("--emit-diff", o.emit_diff, "also print the spectrum diff");
  format_flags(contract, o);

  auto* diff = app.add_subcommand("diff", "spectrum diff between two graphs");
  diff->add_option("before", o.input, "graph JSON file")->required();
  diff->add_option("after", o.second, "graph JSON file")->required();
  format_flags(diff, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed()) return cmd_basis(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (restrict_cmd->parsed()) return cmd_restrict(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (cover->parsed()) return cmd_cover(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (del_edge->parsed()) {
      const EdgeLabeledGraph g = load_graph(o.input);
      return emit_graph_op(o, out, g, delete_edge(g, o.u, o.v));
    }
    if (del_vertex->parsed()) {
      const EdgeLabeledGraph g = load_graph(o.input);
      return emit_graph_op(o, out, g, delete_vertex(g, o.u));
    }
    if (contract->parsed()) {
      const EdgeLabeledGraph g = load_graph(o.input);
      return emit_graph_op(o, out, g, contract_edge(g, o.u, o.v));
    }
    if (diff->parsed()) return cmd_diff(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_computational() ? 1 : 2;
  }
  return 2;
}

}  // namespace gspline::cli
