// Recursive-descent reader and canonical printer for ring elements.
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | identifier | '(' expr ')' | '-' base
//   rational := natural ('/' natural)?
//
// Evaluation happens during the descent: every production yields a
// polynomial over the ring's variables (no variables for Int/ModInt).

#include "gspline/error.hpp"
#include "gspline/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gspline {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingDescriptor& ring)
      : text_(text), ring_(ring), nvars_(ring.kind == RingKind::PolyQ ? ring.variables.size() : 0) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected expression, found end of input");
    Polynomial value = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("expected '+', '-', '*' or end of input, found '") +
                                              text_[pos_] + "'");
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string describe_here() const {
    if (at_end()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      const Integer e = natural();
      if (e > 1000) throw ParseError(pos_, "exponent too large");
      return pow(b, static_cast<std::uint32_t>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected number, variable, '(' or '-', found end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')', found " + describe_here());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(rational(), nvars_);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(pos_, "expected number, variable, '(' or '-', found " + describe_here());
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected natural number, found " + describe_here());
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    const Integer num = natural();
    if (accept('/')) {
      skip_ws();
      const std::size_t at = pos_;
      const Integer den = natural();
      if (den == 0) throw ParseError(at, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Polynomial identifier() {
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (ring_.kind == RingKind::PolyQ) {
      for (std::size_t i = 0; i < ring_.variables.size(); ++i) {
        if (ring_.variables[i] == name) return Polynomial::variable(i, nvars_);
      }
    }
    throw Error(ErrorKind::UnknownVariable,
                "'" + name + "' at position " + std::to_string(start) + " is not a variable of " +
                    format_ring(ring_));
  }

  std::string_view text_;
  const RingDescriptor& ring_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    const std::string mono = format_monomial(e, names);
    std::string body;
    if (mono.empty()) body = format_rational(mag);
    else if (mag == 1) body = mono;
    else body = format_rational(mag) + "*" + mono;
    if (first) {
      // A leading '-' binds tighter than '^', so "-x^2" would read back as
      // (-x)^2; spell the unit coefficient out in that case.
      const auto first_var = std::find_if(e.begin(), e.end(), [](std::uint32_t k) { return k > 0; });
      const bool ambiguous = mag == 1 && first_var != e.end() && *first_var > 1;
      if (negative) out += ambiguous ? "-1*" + mono : "-" + body;
      else out += body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

RingElement parse_element(std::string_view text, const RingDescriptor& ring) {
  Polynomial p = Parser(text, ring).parse();
  if (ring.kind == RingKind::PolyQ) return p;
  Rational c = p.is_zero() ? Rational(0) : p.leading_coefficient();
  if (boost::multiprecision::denominator(c) != 1) {
    throw ParseError(0, "non-integral constant '" + std::string(text) + "' in " + format_ring(ring));
  }
  const Integer value = boost::multiprecision::numerator(c);
  if (ring.kind == RingKind::ModInt) return Residue{value, ring.modulus};
  return value;
}

std::string format_element(const RingElement& a, const RingDescriptor& ring) {
  if (a.is_integer()) return a.integer().str();
  if (a.is_residue()) return a.residue().value.str();
  return format_polynomial(a.polynomial(), ring.variables);
}

std::string format_factored(const FactoredElement& f, const RingDescriptor& ring) {
  if (f.is_zero) return "0";
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& factor : f.factors) {
    if (!out.empty()) out += "*";
    std::string s = format_element(factor.element, ring);
    if (factor.element.is_polynomial() && factor.element.polynomial().size() > 1) s = "(" + s + ")";
    out += s;
    if (factor.multiplicity > 1) out += "^" + std::to_string(factor.multiplicity);
  }
  return out;
}

std::string format_ring(const RingDescriptor& ring) {
  std::ostringstream os;
  switch (ring.kind) {
    case RingKind::Int: os << "Int"; break;
    case RingKind::ModInt: os << "ModInt(" << ring.modulus.str() << ")"; break;
    case RingKind::PolyQ: {
      os << "PolyQ(";
      for (std::size_t i = 0; i < ring.variables.size(); ++i) os << (i ? "," : "") << ring.variables[i];
      os << ")";
      break;
    }
  }
  if (!ring.inverted.empty()) {
    os << " localized at {";
    for (std::size_t i = 0; i < ring.inverted.size(); ++i) {
      os << (i ? ", " : "") << format_element(ring.inverted[i].element, ring);
    }
    os << "}";
  }
  return os.str();
}

}  // namespace gspline
