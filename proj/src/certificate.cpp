#include "gspline/certificate.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <sstream>

namespace gspline {

const char* to_string(CoverStatus::Kind k) {
  switch (k) {
    case CoverStatus::Kind::Covers: return "Covers";
    case CoverStatus::Kind::FailsToCover: return "FailsToCover";
    case CoverStatus::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::FREE: return "FREE";
    case Verdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
    case Verdict::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

namespace {

RingDescriptor cover_ring(const RingDescriptor& ring) {
  if (ring.kind == RingKind::ModInt) return RingDescriptor::integers();
  RingDescriptor base = ring;
  base.inverted.clear();
  return base;
}

bool factor_less(const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); }

RingElement product(const BasicOpen& open, const RingDescriptor& ring) {
  RingElement out = ring.one();
  for (const auto& f : open.invert) out = out * f.element;
  return out;
}

bool divides(const RingElement& p, const RingElement& f, const RingDescriptor& ring) {
  if (f.is_polynomial()) return divide(f.polynomial(), p.polynomial()).second.is_zero();
  return exact_divide(f, p, ring).has_value();
}

/// Smallest declared factor (canonical order) dividing every product.
std::optional<RingElement> shared_factor(const std::vector<BasicOpen>& opens, const std::vector<RingElement>& products,
                                         const RingDescriptor& ring) {
  std::vector<Factor> candidates;
  for (const auto& o : opens) candidates.insert(candidates.end(), o.invert.begin(), o.invert.end());
  std::sort(candidates.begin(), candidates.end(), factor_less);
  for (const auto& c : candidates) {
    if (std::all_of(products.begin(), products.end(), [&](const RingElement& f) { return divides(c.element, f, ring); })) {
      return c.element;
    }
  }
  return std::nullopt;
}

}  // namespace

BasicOpen make_open(std::string name, const std::vector<RingElement>& invert, const RingDescriptor& ring) {
  if (invert.empty()) throw Error(ErrorKind::Schema, "open '" + name + "' inverts nothing");
  const RingDescriptor base = cover_ring(ring);
  BasicOpen out{std::move(name), {}};
  for (const auto& e : invert) {
    if (base.kind == RingKind::Int && e.is_integer()) {
      // Integers are split into primes; inverting 4 is inverting 2.
      const FactoredElement fe = factor_integer(e.integer());
      if (fe.is_zero) throw Error(ErrorKind::InvalidFactor, "open '" + out.name + "' inverts 0");
      for (const auto& f : fe.factors) out.invert.push_back(make_factor(f.element, 1, base));
      continue;
    }
    out.invert.push_back(make_factor(e, 1, base));
  }
  std::sort(out.invert.begin(), out.invert.end(), factor_less);
  out.invert.erase(std::unique(out.invert.begin(), out.invert.end(),
                               [&](const Factor& a, const Factor& b) { return is_associate(a.element, b.element, base); }),
                   out.invert.end());
  if (out.invert.empty()) throw Error(ErrorKind::Schema, "open '" + out.name + "' inverts only units");
  return out;
}

CoverStatus check_cover(const RingDescriptor& ring, const std::vector<BasicOpen>& opens) {
  if (opens.empty()) throw Error(ErrorKind::Schema, "a cover needs at least one open");
  const RingDescriptor base = cover_ring(ring);
  std::vector<RingElement> products;
  for (const auto& o : opens) products.push_back(product(o, base));

  CoverStatus out;
  if (base.is_euclidean()) {
    RingElement g = products[0];
    for (std::size_t i = 1; i < products.size(); ++i) g = gcd(g, products[i], base);
    if (is_unit(g, base)) {
      out.kind = CoverStatus::Kind::Covers;
      out.witness = "gcd of the products is 1";
      return out;
    }
    out.kind = CoverStatus::Kind::FailsToCover;
    out.common_factor = shared_factor(opens, products, base).value_or(normalize_associate(g, base));
    return out;
  }

  if (auto shared = shared_factor(opens, products, base)) {
    out.kind = CoverStatus::Kind::FailsToCover;
    out.common_factor = *shared;
    return out;
  }
  const std::size_t nvars = base.variables.size();
  for (std::size_t var = 0; var < nvars; ++var) {
    std::optional<Polynomial> g;
    std::vector<std::string> used;
    for (std::size_t i = 0; i < products.size(); ++i) {
      const Polynomial& f = products[i].polynomial();
      const auto support = f.support();
      if (support.size() > 1 || (support.size() == 1 && support[0] != var)) continue;
      g = g ? univariate_gcd(*g, f) : std::optional<Polynomial>(f);
      used.push_back(opens[i].name);
    }
    if (g && g->is_constant() && !g->is_zero()) {
      out.kind = CoverStatus::Kind::Covers;
      out.witness = "products of";
      for (const auto& n : used) out.witness += " " + n;
      out.witness += " lie in Q[" + base.variables[var] + "] with gcd 1";
      return out;
    }
  }
  out.kind = CoverStatus::Kind::Inconclusive;
  out.reason = "multivariate cover undecided without Groebner bases: no univariate witness and no shared factor";
  return out;
}

std::vector<OpenResult> classify_restrictions(const EdgeLabeledGraph& g, const std::vector<BasicOpen>& opens) {
  std::vector<OpenResult> out;
  for (const auto& o : opens) out.push_back({o.name, o.invert, restrict(g, o.invert)});
  return out;
}

CertificateReport verify_certificate(const EdgeLabeledGraph& g, const std::vector<BasicOpen>& opens) {
  CertificateReport r;
  r.ring = g.ring();
  r.cover = check_cover(g.ring(), opens);
  r.notes.push_back("cover checked on Spec(R): the diagonal section R -> R_G makes Spec(R_G) -> Spec(R) surjective");
  if (g.ring().kind == RingKind::ModInt) {
    r.verdict = Verdict::NOT_APPLICABLE;
    r.notes.push_back("restrictions are not defined over " + format_ring(g.ring()));
    return r;
  }
  r.opens = classify_restrictions(g, opens);
  const bool all_local = std::all_of(r.opens.begin(), r.opens.end(), [](const OpenResult& o) {
    return o.outcome.classification != RestrictionClass::Other;
  });
  if (!all_local || r.cover.kind == CoverStatus::Kind::Inconclusive) {
    r.verdict = Verdict::UNKNOWN;
  } else if (g.ring().kind == RingKind::PolyQ && g.ring().variables.size() > 2) {
    r.verdict = Verdict::NOT_APPLICABLE;
    r.notes.push_back("local freeness lifts to freeness only in at most two variables here");
  } else if (r.cover.kind == CoverStatus::Kind::Covers) {
    r.verdict = Verdict::FREE;
  } else {
    r.verdict = Verdict::UNKNOWN;
  }
  return r;
}

std::string render_text(const CoverStatus& c, const RingDescriptor& ring) {
  std::string out = to_string(c.kind);
  switch (c.kind) {
    case CoverStatus::Kind::Covers: out += " (" + c.witness + ")"; break;
    case CoverStatus::Kind::FailsToCover: out += "(" + format_element(*c.common_factor, cover_ring(ring)) + ")"; break;
    case CoverStatus::Kind::Inconclusive: out += " (" + c.reason + ")"; break;
  }
  return out;
}

std::string render_text(const CertificateReport& r) {
  const RingDescriptor base = cover_ring(r.ring);
  std::ostringstream os;
  os << "ring: " << format_ring(r.ring) << "\n";
  for (const auto& o : r.opens) {
    os << "open " << o.name << ": invert {";
    for (std::size_t i = 0; i < o.invert.size(); ++i) {
      os << (i ? ", " : "") << format_element(o.invert[i].element, base);
    }
    os << "}\n";
    os << "  classification: " << to_string(o.outcome.classification) << "\n";
    const auto& names = o.outcome.graph.vertices();
    os << "  trivialized edges (" << o.outcome.trivialized.size() << "):";
    for (const auto& e : o.outcome.trivialized) os << " " << names[e.u] << "-" << names[e.v];
    os << "\n";
    if (!o.outcome.cycle.empty()) {
      os << "  cycle:";
      for (const auto& v : o.outcome.cycle) os << " " << v;
      os << "\n";
    }
  }
  os << "cover: " << render_text(r.cover, r.ring) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  return os.str();
}

}  // namespace gspline
