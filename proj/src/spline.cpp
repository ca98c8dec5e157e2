#include "gspline/spline.hpp"

#include "gspline/error.hpp"
#include "hermite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gspline {

using detail::Vec;

namespace {

RingDescriptor base_of(const RingDescriptor& ring) {
  RingDescriptor base = ring;
  base.inverted.clear();
  return base;
}

Integer as_integer(const RingElement& e) {
  if (e.is_integer()) return e.integer();
  if (e.is_residue()) return e.residue().value;
  throw Error(ErrorKind::MixedRings, "integer value expected");
}

std::vector<std::size_t> resolve_order(std::optional<std::vector<std::size_t>> order, std::size_t n) {
  if (!order) {
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return identity;
  }
  std::vector<std::size_t> sorted = *order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorKind::Schema, "vertex order is not a permutation of the vertices");
  }
  if (sorted.size() != n) throw Error(ErrorKind::Schema, "vertex order is not a permutation of the vertices");
  return *order;
}

void require_solvable(const RingDescriptor& ring) {
  if (ring.kind == RingKind::PolyQ && ring.variables.size() != 1) {
    throw Error(ErrorKind::UnsupportedRing,
                "spline bases over " + format_ring(ring) +
                    " need syzygy computations in several variables, which are not supported; "
                    "use the certificate commands to establish freeness");
  }
}

}  // namespace

RingDescriptor solving_ring(const RingDescriptor& ring) {
  if (ring.kind == RingKind::ModInt) return RingDescriptor::integers();
  return base_of(ring);
}

RingElement solving_generator(const FactoredElement& label, const RingDescriptor& ring) {
  const RingDescriptor solve = solving_ring(ring);
  if (ring.kind == RingKind::ModInt) {
    if (label.is_zero) return ring.modulus;
    Integer value = 1;
    for (const auto& f : label.factors) {
      for (unsigned i = 0; i < f.multiplicity; ++i) value *= as_integer(f.element);
    }
    return Integer(boost::multiprecision::gcd(value, ring.modulus));
  }
  if (label.is_zero) return solve.zero();
  RingElement out = solve.one();
  for (const auto& f : label.factors) {
    const bool inverted = std::any_of(ring.inverted.begin(), ring.inverted.end(),
                                      [&](const Factor& inv) { return is_associate(f.element, inv.element, solve); });
    if (inverted) continue;
    for (unsigned i = 0; i < f.multiplicity; ++i) out = out * f.element;
  }
  return out;
}

bool gkm_check(const EdgeLabeledGraph& g, const Spline& s) {
  if (s.values.size() != g.vertex_count()) {
    throw Error(ErrorKind::Schema, "spline has " + std::to_string(s.values.size()) + " values for " +
                                       std::to_string(g.vertex_count()) + " vertices");
  }
  const RingDescriptor solve = solving_ring(g.ring());
  for (const auto& e : g.edges()) {
    RingElement diff;
    if (g.ring().kind == RingKind::ModInt) {
      diff = Integer(as_integer(s.values[e.u]) - as_integer(s.values[e.v]));
    } else {
      diff = s.values[e.u] - s.values[e.v];
    }
    const RingElement h = solving_generator(e.label, g.ring());
    if (h.is_zero()) {
      if (!diff.is_zero()) return false;
      continue;
    }
    if (!exact_divide(diff, h, solve)) return false;
  }
  return true;
}

// --- flow-up normal form ---------------------------------------------------

SplineModule flow_up_normalize(const RingDescriptor& ring, const std::vector<std::string>& vertices,
                               GeneratorMatrix generators, std::vector<std::size_t> vertex_order) {
  require_solvable(ring);
  vertex_order = resolve_order(std::move(vertex_order), vertices.size());
  const RingDescriptor solve = solving_ring(ring);
  const bool modular = ring.kind == RingKind::ModInt;
  if (modular) {
    // Work over Z with the modulus generators n*e_v added, then reduce.
    for (auto& row : generators) {
      for (auto& e : row) e = as_integer(e);
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      Vec row(vertices.size(), solve.zero());
      row[v] = ring.modulus;
      generators.push_back(std::move(row));
    }
  }
  for (const auto& row : generators) {
    if (row.size() != vertices.size()) throw Error(ErrorKind::Schema, "generator length does not match vertex count");
  }
  detail::Echelon ech = detail::row_hermite(std::move(generators), vertex_order, solve);

  SplineModule m;
  m.ring = ring;
  m.vertices = vertices;
  m.vertex_order = vertex_order;
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    const std::size_t pos = ech.pivot_positions[i];
    Vec row = std::move(ech.rows[i]);
    if (modular) {
      const RingElement lead(Residue{row[vertex_order[pos]].integer(), ring.modulus});
      if (lead.is_zero()) continue;  // the pivot equals n: the row is n*e_v
      for (auto& e : row) e = Residue{e.integer(), ring.modulus};
    }
    m.leading.push_back(row[vertex_order[pos]]);
    m.pivots.push_back(pos);
    m.basis.push_back({std::move(row)});
  }
  return m;
}

// --- direct solve -----------------------------------------------------------

SplineModule solve_direct(const EdgeLabeledGraph& g, std::optional<std::vector<std::size_t>> vertex_order) {
  require_solvable(g.ring());
  const RingDescriptor solve = solving_ring(g.ring());
  const std::size_t n = g.vertex_count();
  GeneratorMatrix generators;
  for (const auto& members : component_partition(n, g.edges())) {
    std::vector<std::size_t> local(n, n);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<const Edge*> edges;
    for (const auto& e : g.edges()) {
      if (local[e.u] != n) edges.push_back(&e);
    }
    // Rows: s_u - s_v - h_e t_e = 0 over the unknowns (s, t).
    const std::size_t nv = members.size(), ne = edges.size();
    std::vector<Vec> system(ne, Vec(nv + ne, solve.zero()));
    for (std::size_t k = 0; k < ne; ++k) {
      system[k][local[edges[k]->u]] = solve.one();
      system[k][local[edges[k]->v]] = -solve.one();
      system[k][nv + k] = -solving_generator(edges[k]->label, g.ring());
    }
    for (const Vec& x : detail::kernel_basis(system, nv + ne, solve)) {
      Vec row(n, solve.zero());
      bool nonzero = false;
      for (std::size_t i = 0; i < nv; ++i) {
        row[members[i]] = x[i];
        nonzero = nonzero || !x[i].is_zero();
      }
      if (nonzero) generators.push_back(std::move(row));
    }
  }
  return flow_up_normalize(g.ring(), g.vertices(), std::move(generators), resolve_order(std::move(vertex_order), n));
}

// --- incremental construction ---------------------------------------------

std::vector<std::size_t> default_edge_order(const EdgeLabeledGraph& g) {
  std::vector<std::size_t> order;
  if (g.edges().empty()) return order;
  std::vector<bool> built(g.vertex_count(), false), used(g.edge_count(), false);
  built[g.edges()[0].u] = true;
  for (std::size_t placed = 0; placed < g.edge_count(); ++placed) {
    std::size_t pick = g.edge_count();
    for (std::size_t i = 0; i < g.edge_count() && pick == g.edge_count(); ++i) {
      if (!used[i] && (built[g.edges()[i].u] || built[g.edges()[i].v])) pick = i;
    }
    if (pick == g.edge_count()) {
      throw Error(ErrorKind::DisconnectedInput, "graph is not connected; split it into components first");
    }
    used[pick] = true;
    built[g.edges()[pick].u] = built[g.edges()[pick].v] = true;
    order.push_back(pick);
  }
  return order;
}

std::pair<SplineModule, LimitTrace> build_incremental(const EdgeLabeledGraph& g,
                                                      const std::vector<std::size_t>& edge_order,
                                                      std::optional<std::vector<std::size_t>> vertex_order) {
  require_solvable(g.ring());
  const std::size_t n = g.vertex_count();
  if (component_partition(n, g.edges()).size() > 1) {
    throw Error(ErrorKind::DisconnectedInput, "incremental construction needs a connected graph");
  }
  {
    std::vector<std::size_t> sorted = edge_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> all(g.edge_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (sorted != all) throw Error(ErrorKind::Schema, "edge order must list every edge exactly once");
  }
  const RingDescriptor solve = solving_ring(g.ring());
  LimitTrace trace;
  if (n == 0) return {flow_up_normalize(g.ring(), g.vertices(), {}, resolve_order(std::move(vertex_order), 0)), trace};

  // Built vertices (graph indices) in insertion order, and generator rows over them.
  std::vector<std::size_t> built;
  std::vector<std::size_t> slot(n, n);
  const std::size_t start = edge_order.empty() ? 0 : g.edges()[edge_order[0]].u;
  built.push_back(start);
  slot[start] = 0;
  std::vector<Vec> gens{Vec{solve.one()}};
  trace.start = g.vertices()[start];

  auto identity_order = [&] {
    std::vector<std::size_t> order(built.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  };

  for (std::size_t idx : edge_order) {
    const Edge& e = g.edges()[idx];
    const RingElement h = solving_generator(e.label, g.ring());
    LimitStep step;
    step.label = e.label;
    const bool has_u = slot[e.u] != n, has_v = slot[e.v] != n;
    if (has_u && has_v) {
      step.kind = LimitStep::Kind::EdgeEqualizer;
      step.first = g.vertices()[e.u];
      step.second = g.vertices()[e.v];
      // Coefficient vectors c with sum c_i (b_i(u) - b_i(v)) in (h).
      Vec row;
      for (const auto& b : gens) row.push_back(b[slot[e.u]] - b[slot[e.v]]);
      row.push_back(h);
      std::vector<Vec> next;
      for (const Vec& c : detail::kernel_basis({row}, row.size(), solve)) {
        Vec combo(built.size(), solve.zero());
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (!c[i].is_zero()) combo = detail::combine(solve.one(), combo, c[i], gens[i]);
        }
        if (!detail::is_zero_vector(combo)) next.push_back(std::move(combo));
      }
      gens = std::move(next);
    } else if (has_u || has_v) {
      const std::size_t attach = has_u ? e.u : e.v;
      const std::size_t fresh = has_u ? e.v : e.u;
      step.kind = LimitStep::Kind::LeafPullback;
      step.first = g.vertices()[fresh];
      step.second = g.vertices()[attach];
      for (auto& b : gens) b.push_back(b[slot[attach]]);
      slot[fresh] = built.size();
      built.push_back(fresh);
      if (!h.is_zero()) {
        Vec leaf(built.size(), solve.zero());
        leaf.back() = h;
        gens.push_back(std::move(leaf));
      }
    } else {
      throw Error(ErrorKind::DisconnectedInput,
                  "edge " + g.vertices()[e.u] + " -- " + g.vertices()[e.v] + " does not touch the part built so far");
    }
    gens = detail::row_hermite(std::move(gens), identity_order(), solve).rows;
    step.vertices.clear();
    for (std::size_t b : built) step.vertices.push_back(g.vertices()[b]);
    step.generators = gens;
    trace.steps.push_back(std::move(step));
  }

  GeneratorMatrix full;
  for (const auto& b : gens) {
    Vec row(n, solve.zero());
    for (std::size_t i = 0; i < built.size(); ++i) row[built[i]] = b[i];
    full.push_back(std::move(row));
  }
  return {flow_up_normalize(g.ring(), g.vertices(), std::move(full), resolve_order(std::move(vertex_order), n)),
          std::move(trace)};
}

// --- brute force ------------------------------------------------------------

namespace {

std::uint64_t labeling_space(const EdgeLabeledGraph& g) {
  if (g.ring().kind != RingKind::ModInt) {
    throw Error(ErrorKind::UnsupportedRing, "brute-force enumeration needs a ModInt ring, got " + format_ring(g.ring()));
  }
  if (g.ring().modulus > Integer(kBruteForceLimit)) throw Error(ErrorKind::TooLarge, "modulus too large");
  const std::uint64_t n = static_cast<std::uint64_t>(g.ring().modulus);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    total *= n;
    if (total > kBruteForceLimit) {
      throw Error(ErrorKind::TooLarge, "n^|V| exceeds " + std::to_string(kBruteForceLimit) + " labelings");
    }
  }
  return total;
}

}  // namespace

std::vector<std::uint64_t> enumerate_codes(const EdgeLabeledGraph& g) {
  labeling_space(g);
  const std::int64_t n = static_cast<std::int64_t>(g.ring().modulus);
  const std::size_t nv = g.vertex_count();
  // Edges checked as soon as their later endpoint is assigned.
  struct Check {
    std::size_t other;
    std::int64_t modulus;  // 0 means equality
  };
  std::vector<std::vector<Check>> checks(nv);
  for (const auto& e : g.edges()) {
    const Integer h = as_integer(solving_generator(e.label, g.ring()));
    // Differences of residues lie in (-n, n); h | n, so "h | diff" is the test (h == n means equal).
    checks[e.v].push_back({e.u, static_cast<std::int64_t>(h)});
  }
  std::vector<std::uint64_t> codes;
  if (nv == 0) return {0};
  std::vector<std::int64_t> value(nv, 0);
  std::size_t depth = 0;
  value[0] = -1;
  while (true) {
    ++value[depth];
    if (value[depth] >= n) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    bool ok = true;
    for (const auto& c : checks[depth]) {
      if ((value[depth] - value[c.other]) % c.modulus != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == nv) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < nv; ++i) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(value[i]);
      codes.push_back(code);
    } else {
      ++depth;
      value[depth] = -1;
    }
  }
  return codes;
}

Spline decode_spline(std::uint64_t code, const RingDescriptor& ring, std::size_t vertex_count) {
  const std::uint64_t n = static_cast<std::uint64_t>(ring.modulus);
  Spline s;
  s.values.resize(vertex_count);
  for (std::size_t i = vertex_count; i-- > 0;) {
    s.values[i] = Residue{Integer(code % n), ring.modulus};
    code /= n;
  }
  return s;
}

std::vector<Spline> enumerate_bruteforce(const EdgeLabeledGraph& g) {
  std::vector<Spline> out;
  for (std::uint64_t code : enumerate_codes(g)) out.push_back(decode_spline(code, g.ring(), g.vertex_count()));
  return out;
}

std::vector<std::uint64_t> span_codes(const SplineModule& m) {
  if (m.ring.kind != RingKind::ModInt) throw Error(ErrorKind::UnsupportedRing, "span_codes needs a ModInt module");
  const std::size_t nv = m.vertices.size();
  const std::uint64_t n = static_cast<std::uint64_t>(m.ring.modulus);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    total *= n;
    if (total > kBruteForceLimit) throw Error(ErrorKind::TooLarge, "span too large to enumerate");
  }
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> digits;  // flat nv-digit rows of the members found so far
  std::vector<std::uint64_t> codes{0};
  seen[0] = true;
  digits.assign(nv, 0);
  std::vector<std::uint64_t> x(nv);
  for (const auto& b : m.basis) {
    std::vector<std::uint64_t> gen(nv);
    for (std::size_t i = 0; i < nv; ++i) gen[i] = static_cast<std::uint64_t>(b.values[i].residue().value);
    const std::size_t before = codes.size();
    for (std::uint64_t c = 1; c < n; ++c) {
      for (std::size_t k = 0; k < before; ++k) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < nv; ++i) {
          x[i] = (digits[k * nv + i] + c * gen[i]) % n;
          code = code * n + x[i];
        }
        if (seen[code]) continue;
        seen[code] = true;
        codes.push_back(code);
        digits.insert(digits.end(), x.begin(), x.end());
      }
    }
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

// --- membership -------------------------------------------------------------

namespace {

Fraction reduce(RingElement num, RingElement den, const RingDescriptor& solve) {
  if (num.is_zero()) return {solve.zero(), solve.one()};
  const RingElement g = gcd(num, den, solve);
  num = *exact_divide(num, g, solve);
  den = *exact_divide(den, g, solve);
  if (den.is_integer()) {
    if (den.integer() < 0) {
      num = -num;
      den = -den;
    }
  } else {
    const RingElement scale = Polynomial::constant(Rational(1) / den.polynomial().leading_coefficient(),
                                                   solve.variables.size());
    num = num * scale;
    den = den * scale;
  }
  return {std::move(num), std::move(den)};
}

Fraction sub(const Fraction& a, const Fraction& b, const RingDescriptor& solve) {
  return reduce(a.num * b.den - b.num * a.den, a.den * b.den, solve);
}

Fraction mul(const Fraction& a, const Fraction& b, const RingDescriptor& solve) {
  return reduce(a.num * b.num, a.den * b.den, solve);
}

}  // namespace

Membership membership(const SplineModule& m, const Spline& s) {
  require_solvable(m.ring);
  const std::size_t nv = m.vertices.size();
  if (s.values.size() != nv) throw Error(ErrorKind::Schema, "spline length does not match module");
  const RingDescriptor solve = solving_ring(m.ring);
  const bool modular = m.ring.kind == RingKind::ModInt;

  // Rows to back-substitute against; for ModInt the lifted basis plus n*e_v
  // wherever no stored pivot exists.
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::vector<bool> stored;
  {
    std::size_t b = 0;
    for (std::size_t pos = 0; pos < nv; ++pos) {
      if (b < m.basis.size() && m.pivots[b] == pos) {
        Vec row = m.basis[b].values;
        if (modular) {
          for (auto& e : row) e = as_integer(e);
        }
        rows.push_back(std::move(row));
        pivots.push_back(pos);
        stored.push_back(true);
        ++b;
      } else if (modular) {
        Vec row(nv, solve.zero());
        row[m.vertex_order[pos]] = m.ring.modulus;
        rows.push_back(std::move(row));
        pivots.push_back(pos);
        stored.push_back(false);
      }
    }
  }

  std::vector<Fraction> residual;
  for (const auto& v : s.values) residual.push_back({modular ? RingElement(as_integer(v)) : v, solve.one()});

  Membership out;
  std::size_t r = 0;
  for (std::size_t pos = 0; pos < nv; ++pos) {
    const std::size_t col = m.vertex_order[pos];
    if (r < rows.size() && pivots[r] == pos) {
      const Vec& row = rows[r];
      Fraction c = reduce(residual[col].num, residual[col].den * row[col], solve);
      if (!is_unit(c.den, m.ring.kind == RingKind::ModInt ? solve : m.ring)) return {};
      if (!c.num.is_zero()) {
        for (std::size_t j = 0; j < nv; ++j) {
          if (!row[j].is_zero()) residual[j] = sub(residual[j], mul(c, {row[j], solve.one()}, solve), solve);
        }
      }
      if (!modular || stored[r]) {
        if (modular) c = {Residue{c.num.integer(), m.ring.modulus}, m.ring.one()};
        out.coefficients.push_back(std::move(c));
      }
      ++r;
    } else if (!residual[col].num.is_zero()) {
      return {};
    }
  }
  out.member = true;
  return out;
}

Spline recombine(const SplineModule& m, const std::vector<Fraction>& coefficients) {
  if (coefficients.size() != m.basis.size()) throw Error(ErrorKind::Schema, "one coefficient per basis element expected");
  const std::size_t nv = m.vertices.size();
  if (m.ring.kind == RingKind::ModInt) {
    Spline s{std::vector<RingElement>(nv, m.ring.zero())};
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      for (std::size_t j = 0; j < nv; ++j) s.values[j] = s.values[j] + coefficients[i].num * m.basis[i].values[j];
    }
    return s;
  }
  const RingDescriptor solve = solving_ring(m.ring);
  std::vector<Fraction> acc(nv, {solve.zero(), solve.one()});
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const Fraction term = mul(coefficients[i], {m.basis[i].values[j], solve.one()}, solve);
      acc[j] = sub(acc[j], {-term.num, term.den}, solve);
    }
  }
  Spline s;
  for (const auto& f : acc) {
    if (!is_unit(f.den, solve)) throw Error(ErrorKind::Schema, "recombined value is not a ring element");
    s.values.push_back(*exact_divide(f.num, f.den, solve));
  }
  return s;
}

SplineModule localize(const SplineModule& m, const std::vector<Factor>& invert) {
  if (m.ring.kind == RingKind::ModInt) throw Error(ErrorKind::UnsupportedRing, "ModInt modules cannot be localized");
  SplineModule out = m;
  const RingDescriptor base = base_of(m.ring);
  for (const auto& f : invert) out.ring.inverted.push_back(make_factor(f.element, 1, base));
  std::sort(out.ring.inverted.begin(), out.ring.inverted.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); });
  out.ring.inverted.erase(std::unique(out.ring.inverted.begin(), out.ring.inverted.end(),
                                      [](const Factor& a, const Factor& b) { return a.element == b.element; }),
                          out.ring.inverted.end());
  return out;
}

Spline constant_spline(const RingElement& r, std::size_t vertex_count) {
  return {std::vector<RingElement>(vertex_count, r)};
}

// --- text -------------------------------------------------------------------

namespace {

std::string render_matrix(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) {
    width[j] = header[j].size();
    for (const auto& r : rows) width[j] = std::max(width[j], r[j].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      text += (j ? "  " : "  ") + std::string(width[j] - cells[j].size(), ' ') + cells[j];
    }
    os << text << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace

std::string render_text(const SplineModule& m) {
  std::ostringstream os;
  os << "ring: " << format_ring(m.ring) << "\n";
  os << "rank: " << m.rank() << "\n";
  std::vector<std::string> header;
  for (std::size_t i : m.vertex_order) header.push_back(m.vertices[i]);
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : m.basis) {
    std::vector<std::string> cells;
    for (std::size_t i : m.vertex_order) cells.push_back(format_element(b.values[i], m.ring));
    rows.push_back(std::move(cells));
  }
  os << render_matrix(header, rows);
  return os.str();
}

std::string render_text(const LimitTrace& t, const RingDescriptor& ring) {
  std::ostringstream os;
  const RingDescriptor solve = solving_ring(ring);
  os << "start: " << t.start << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    os << "step " << (i + 1) << ": ";
    if (s.kind == LimitStep::Kind::LeafPullback) {
      os << "pullback: new vertex " << s.first << " attached to " << s.second;
    } else {
      os << "equalizer: " << s.first << " -- " << s.second;
    }
    os << " along <" << format_factored(s.label, ring) << ">\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : s.generators) {
      std::vector<std::string> cells;
      for (const auto& e : g) cells.push_back(format_element(e, solve));
      rows.push_back(std::move(cells));
    }
    os << render_matrix(s.vertices, rows);
  }
  return os.str();
}

}  // namespace gspline
