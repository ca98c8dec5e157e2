#include "gspline/ring.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <set>

namespace gspline {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NoSuchVertex: return "NoSuchVertex";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnrelatedGraphs: return "UnrelatedGraphs";
    case ErrorKind::InvalidFactor: return "InvalidFactor";
    case ErrorKind::Schema: return "Schema";
  }
  return "Error";
}

namespace {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

[[noreturn]] void mixed() { throw Error(ErrorKind::MixedRings, "operands belong to different rings"); }

const Residue& same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) mixed();
  return a;
}

}  // namespace

RingElement::RingElement(Residue r) {
  r.value = floor_mod(r.value, r.modulus);
  value_ = std::move(r);
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) return v == 0;
        else if constexpr (std::is_same_v<T, Residue>) return v.value == 0;
        else return v.is_zero();
      },
      value_);
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.is_integer() && b.is_integer()) return Integer(a.integer() + b.integer());
  if (a.is_residue() && b.is_residue()) {
    const auto& r = same_modulus(a.residue(), b.residue());
    return Residue{r.value + b.residue().value, r.modulus};
  }
  if (a.is_polynomial() && b.is_polynomial()) return a.polynomial() + b.polynomial();
  mixed();
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  if (a.is_integer() && b.is_integer()) return Integer(a.integer() - b.integer());
  if (a.is_residue() && b.is_residue()) {
    const auto& r = same_modulus(a.residue(), b.residue());
    return Residue{r.value - b.residue().value, r.modulus};
  }
  if (a.is_polynomial() && b.is_polynomial()) return a.polynomial() - b.polynomial();
  mixed();
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.is_integer() && b.is_integer()) return Integer(a.integer() * b.integer());
  if (a.is_residue() && b.is_residue()) {
    const auto& r = same_modulus(a.residue(), b.residue());
    return Residue{r.value * b.residue().value, r.modulus};
  }
  if (a.is_polynomial() && b.is_polynomial()) return a.polynomial() * b.polynomial();
  mixed();
}

RingElement operator-(const RingElement& a) {
  if (a.is_integer()) return Integer(-a.integer());
  if (a.is_residue()) return Residue{-a.residue().value, a.residue().modulus};
  return -a.polynomial();
}

bool canonical_less(const RingElement& a, const RingElement& b) {
  if (a.value().index() != b.value().index()) return a.value().index() < b.value().index();
  if (a.is_integer()) return a.integer() < b.integer();
  if (a.is_residue()) return a.residue().value < b.residue().value;
  return canonical_less(a.polynomial(), b.polynomial());
}

// --- RingDescriptor ---------------------------------------------------------

RingDescriptor RingDescriptor::integers() { return {}; }

RingDescriptor RingDescriptor::integers_mod(const Integer& n) {
  RingDescriptor r;
  r.kind = RingKind::ModInt;
  r.modulus = n;
  r.validate();
  return r;
}

RingDescriptor RingDescriptor::polynomials(std::vector<std::string> variables) {
  RingDescriptor r;
  r.kind = RingKind::PolyQ;
  r.variables = std::move(variables);
  r.validate();
  return r;
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

void RingDescriptor::validate() const {
  switch (kind) {
    case RingKind::ModInt:
      if (modulus < 2) throw Error(ErrorKind::Schema, "ModInt modulus must be >= 2");
      if (!inverted.empty()) throw Error(ErrorKind::UnsupportedRing, "ModInt rings cannot be localized");
      break;
    case RingKind::PolyQ: {
      if (variables.empty()) throw Error(ErrorKind::Schema, "PolyQ needs at least one variable");
      std::set<std::string> seen;
      for (const auto& v : variables) {
        if (!is_identifier(v)) throw Error(ErrorKind::Schema, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorKind::Schema, "duplicate variable '" + v + "'");
      }
      break;
    }
    case RingKind::Int:
      break;
  }
  RingDescriptor base = *this;
  base.inverted.clear();
  for (const auto& f : inverted) {
    const Factor checked = make_factor(f.element, 1, base);
    if (!(checked.element == f.element)) {
      throw Error(ErrorKind::InvalidFactor, "inverted element is not in normalized form");
    }
  }
}

bool RingDescriptor::is_euclidean() const {
  return kind == RingKind::Int || (kind == RingKind::PolyQ && variables.size() == 1);
}

bool RingDescriptor::same_base(const RingDescriptor& other) const {
  return kind == other.kind && modulus == other.modulus && variables == other.variables;
}

RingElement RingDescriptor::zero() const { return from_integer(0); }
RingElement RingDescriptor::one() const { return from_integer(1); }

RingElement RingDescriptor::from_integer(const Integer& i) const {
  switch (kind) {
    case RingKind::Int: return i;
    case RingKind::ModInt: return Residue{i, modulus};
    case RingKind::PolyQ: return Polynomial::constant(Rational(i), variables.size());
  }
  return i;
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  return a.same_base(b) && a.inverted == b.inverted;
}

// --- units, associates, division --------------------------------------------

namespace {

bool is_base_unit(const RingElement& a) {
  if (a.is_integer()) return a.integer() == 1 || a.integer() == -1;
  if (a.is_residue()) return boost::multiprecision::gcd(a.residue().value, a.residue().modulus) == 1;
  return !a.is_zero() && a.polynomial().is_constant();
}

/// Divides out every inverted factor as often as it divides a.
RingElement strip_inverted(RingElement a, const RingDescriptor& ring) {
  if (a.is_zero()) return a;
  RingDescriptor base = ring;
  base.inverted.clear();
  for (const auto& f : ring.inverted) {
    while (true) {
      auto q = exact_divide(a, f.element, base);
      if (!q) break;
      a = std::move(*q);
    }
  }
  return a;
}

}  // namespace

bool is_unit(const RingElement& a, const RingDescriptor& ring) {
  if (a.is_zero()) return false;
  if (ring.inverted.empty()) return is_base_unit(a);
  return is_base_unit(strip_inverted(a, ring));
}

RingElement normalize_associate(const RingElement& a, const RingDescriptor&) {
  if (a.is_integer()) return iabs(a.integer());
  if (a.is_polynomial()) return a.polynomial().monic();
  return a;
}

bool is_associate(const RingElement& a, const RingElement& b, const RingDescriptor& ring) {
  if (a.is_residue() || b.is_residue()) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto q1 = exact_divide(a, b, ring);
    auto q2 = exact_divide(b, a, ring);
    return q1 && q2;
  }
  if (ring.inverted.empty()) return normalize_associate(a, ring) == normalize_associate(b, ring);
  return normalize_associate(strip_inverted(a, ring), ring) ==
         normalize_associate(strip_inverted(b, ring), ring);
}

namespace {

void require_euclidean(const RingDescriptor& ring, const char* op) {
  if (!ring.is_euclidean()) {
    throw Error(ErrorKind::UnsupportedRing,
                std::string(op) + " needs Int or univariate PolyQ, got " + format_ring(ring));
  }
}

}  // namespace

std::pair<RingElement, RingElement> euclidean_divmod(const RingElement& a, const RingElement& b,
                                                     const RingDescriptor& ring) {
  require_euclidean(ring, "euclidean division");
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "euclidean division by zero");
  if (a.is_integer() && b.is_integer()) {
    const Integer r = floor_mod(a.integer(), b.integer());
    return {Integer((a.integer() - r) / b.integer()), r};
  }
  if (a.is_polynomial() && b.is_polynomial()) {
    auto [q, r] = divide(a.polynomial(), b.polynomial());
    return {std::move(q), std::move(r)};
  }
  mixed();
}

RingElement gcd(const RingElement& a, const RingElement& b, const RingDescriptor& ring) {
  require_euclidean(ring, "gcd");
  if (a.is_integer() && b.is_integer()) return Integer(boost::multiprecision::gcd(a.integer(), b.integer()));
  if (a.is_polynomial() && b.is_polynomial()) return *univariate_gcd(a.polynomial(), b.polynomial());
  mixed();
}

ExtendedGcd extended_gcd(const RingElement& a, const RingElement& b, const RingDescriptor& ring) {
  require_euclidean(ring, "extended_gcd");
  RingElement r0 = a, r1 = b;
  RingElement s0 = ring.one(), s1 = ring.zero();
  RingElement t0 = ring.zero(), t1 = ring.one();
  while (!r1.is_zero()) {
    auto [q, r] = euclidean_divmod(r0, r1, ring);
    RingElement s2 = s0 - q * s1;
    RingElement t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, ring.zero(), ring.zero()};
  // Scale so that g is the normalized associate.
  RingElement unit_inverse;
  if (r0.is_integer()) {
    unit_inverse = Integer(r0.integer() < 0 ? -1 : 1);
  } else {
    const Rational lc = r0.polynomial().leading_coefficient();
    unit_inverse = Polynomial::constant(Rational(1) / lc, ring.variables.size());
  }
  return {r0 * unit_inverse, s0 * unit_inverse, t0 * unit_inverse};
}

std::optional<RingElement> exact_divide(const RingElement& a, const RingElement& b,
                                        const RingDescriptor& ring) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide by zero");
  if (a.is_integer() && b.is_integer()) {
    if (a.integer() % b.integer() != 0) return std::nullopt;
    return Integer(a.integer() / b.integer());
  }
  if (a.is_residue() && b.is_residue()) {
    const auto& ra = same_modulus(a.residue(), b.residue());
    const Integer& n = ra.modulus;
    // Solve q*b = a (mod n): solvable iff gcd(b, n) | a.
    Integer x0 = 1, x1 = 0, r0 = b.residue().value, r1 = n;
    while (r1 != 0) {
      Integer q = r0 / r1;
      Integer t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (ra.value % r0 != 0) return std::nullopt;
    return RingElement(Residue{x0 * (ra.value / r0), n});
  }
  if (a.is_polynomial() && b.is_polynomial()) {
    auto [q, r] = divide(a.polynomial(), b.polynomial());
    if (!r.is_zero()) return std::nullopt;
    return RingElement(std::move(q));
  }
  (void)ring;
  mixed();
}

Integer euclidean_size(const RingElement& a) {
  if (a.is_integer()) return iabs(a.integer());
  if (a.is_residue()) return a.residue().value;
  return Integer(a.polynomial().total_degree() + 1);
}

// --- factors ----------------------------------------------------------------

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : small) {
    Integer x = boost::multiprecision::powm(Integer(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  return rn * rn == num && rd * rd == den;
}

}  // namespace

Factor make_factor(const RingElement& element, unsigned multiplicity, const RingDescriptor& ring) {
  if (multiplicity == 0) throw Error(ErrorKind::InvalidFactor, "factor multiplicity must be positive");
  RingDescriptor base = ring;
  base.inverted.clear();
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::ModInt: {
      Integer v;
      if (element.is_integer()) v = element.integer();
      else if (element.is_residue()) v = element.residue().value;
      else throw Error(ErrorKind::MixedRings, "integer factor expected");
      v = iabs(v);
      if (v < 2) throw Error(ErrorKind::InvalidFactor, "factor " + v.str() + " is zero or a unit");
      if (!is_probable_prime(v)) throw Error(ErrorKind::InvalidFactor, "factor " + v.str() + " is not prime");
      return {RingElement(v), multiplicity, Irreducibility::Verified};
    }
    case RingKind::PolyQ: {
      if (!element.is_polynomial()) throw Error(ErrorKind::MixedRings, "polynomial factor expected");
      const Polynomial p = element.polynomial().monic();
      if (p.nvars() != ring.variables.size()) throw Error(ErrorKind::MixedRings, "factor over a different ring");
      if (p.is_constant()) throw Error(ErrorKind::InvalidFactor, "polynomial factor is zero or a unit");
      const auto vars = p.support();
      if (vars.size() == 1 && p.total_degree() <= 2) {
        if (p.total_degree() == 2) {
          Rational b = 0, c = 0;
          for (const auto& [e, coeff] : p.terms()) {
            if (e[vars[0]] == 1) b = coeff;
            if (e[vars[0]] == 0) c = coeff;
          }
          if (is_rational_square(b * b - 4 * c)) {
            throw Error(ErrorKind::InvalidFactor,
                        "quadratic factor " + format_element(p, base) + " is reducible over Q");
          }
        }
        return {RingElement(p), multiplicity, Irreducibility::Verified};
      }
      return {RingElement(p), multiplicity, Irreducibility::Declared};
    }
  }
  throw Error(ErrorKind::InvalidFactor, "unsupported ring");
}

FactoredElement factor_integer(const Integer& n) {
  if (n == 0) return FactoredElement::zero();
  Integer m = iabs(n);
  FactoredElement out;
  for (Integer p = 2; p * p <= m; ++p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) out.factors.push_back({RingElement(p), k, Irreducibility::Verified});
  }
  if (m > 1) out.factors.push_back({RingElement(m), 1, Irreducibility::Verified});
  return out;
}

FactoredElement canonicalize(FactoredElement f, const RingDescriptor& ring) {
  if (f.is_zero) return FactoredElement::zero();
  std::vector<Factor> merged;
  for (auto& factor : f.factors) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& m) {
      return normalize_associate(m.element, ring) == normalize_associate(factor.element, ring);
    });
    if (it != merged.end()) {
      it->multiplicity += factor.multiplicity;
    } else {
      factor.element = normalize_associate(factor.element, ring);
      merged.push_back(std::move(factor));
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.element, b.element); });
  return {std::move(merged), false};
}

RingElement expand(const FactoredElement& f, const RingDescriptor& ring) {
  if (f.is_zero) return ring.zero();
  RingElement out = ring.one();
  for (const auto& factor : f.factors) {
    RingElement e = factor.element;
    if (ring.kind == RingKind::ModInt && e.is_integer()) e = Residue{e.integer(), ring.modulus};
    for (unsigned i = 0; i < factor.multiplicity; ++i) out = out * e;
  }
  return out;
}

bool trivializes(const FactoredElement& label, const RingDescriptor& ring) {
  if (label.is_zero) return false;
  RingDescriptor base = ring;
  base.inverted.clear();
  return std::all_of(label.factors.begin(), label.factors.end(), [&](const Factor& f) {
    return std::any_of(ring.inverted.begin(), ring.inverted.end(), [&](const Factor& inv) {
      return is_associate(f.element, inv.element, base);
    });
  });
}

}  // namespace gspline
