#include "gspline/polynomial.hpp"

#include "gspline/error.hpp"

#include <algorithm>
#include <numeric>

namespace gspline {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(const Rational& c, std::size_t nvars) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && gspline::total_degree(leading_monomial()) == 0);
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(gspline::total_degree(leading_monomial()));
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (degree_in(v) > 0) vars.push_back(v);
  }
  return vars;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) {
    throw Error(ErrorKind::MixedRings, "monomial arity does not match polynomial ring");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  out *= Rational(1) / leading_coefficient();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::MixedRings, "polynomials over different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::MixedRings, "polynomials over different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::MixedRings, "polynomials over different rings");
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::size_t n = a.nvars();
  Polynomial quotient(n), remainder(n), rest = a;
  const Exponents& lead = b.leading_monomial();
  const Rational& lead_coeff = b.leading_coefficient();
  Exponents shift(n);
  while (!rest.is_zero()) {
    const Exponents m = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    if (divides(lead, m)) {
      for (std::size_t i = 0; i < n; ++i) shift[i] = m[i] - lead[i];
      Polynomial t(n);
      t.add_term(shift, c / lead_coeff);
      quotient += t;
      rest -= t * b;
    } else {
      Polynomial t(n);
      t.add_term(m, c);
      remainder += t;
      rest -= t;
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
  Polynomial result = Polynomial::constant(Rational(1), base.nvars());
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const GrlexGreater greater;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b) {
  auto sa = a.support();
  auto sb = b.support();
  sa.insert(sa.end(), sb.begin(), sb.end());
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  if (sa.size() > 1) return std::nullopt;
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    auto rem = divide(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return r0.monic();
}

}  // namespace gspline
