#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gspline {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One exponent per ring variable, in declaration order.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with the first declared variable most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored, so the zero polynomial is the empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(const Rational& c, std::size_t nvars);
  static Polynomial variable(std::size_t index, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Leading term under grlex; the polynomial must be nonzero.
  const Exponents& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// -1 for the zero polynomial.
  long total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  /// Indices of variables with a positive exponent in some term.
  std::vector<std::size_t> support() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Multivariate division by a single divisor (leading-term elimination under
/// grlex). Returns (quotient, remainder). For polynomials in one variable
/// this is ordinary Euclidean division.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, std::uint32_t exponent);

/// Monic gcd of two polynomials whose variables all lie in one common
/// variable (constants allowed). nullopt when they involve two or more
/// distinct variables, where no Euclidean algorithm is available.
std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b);

/// Total order on polynomials: compares term sequences in grlex order.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace gspline
