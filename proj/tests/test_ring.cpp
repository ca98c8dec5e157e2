#include "support.hpp"

#include "gspline/error.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace gspline;
using testing::poly;

namespace {

const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Qx = RingDescriptor::polynomials({"x"});
const RingDescriptor Qxy = RingDescriptor::polynomials({"x", "y"});

// Dense oracle for polynomials in x, y: (i, j) -> coefficient of x^i y^j.
using Dense = std::map<std::pair<int, int>, Rational>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Dense to_dense(const Polynomial& p) {
  Dense out;
  for (const auto& [e, c] : p.terms()) out[{static_cast<int>(e[0]), p.nvars() > 1 ? static_cast<int>(e[1]) : 0}] = c;
  return out;
}

// Univariate dense polynomials, coefficient i for x^i, for a long-division oracle.
using Uni = std::vector<Rational>;

void trim(Uni& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::pair<Uni, Uni> uni_divmod(Uni a, Uni b) {
  trim(a);
  trim(b);
  Uni q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = uni_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Uni to_uni(const Polynomial& p) {
  Uni out;
  for (const auto& [e, c] : p.terms()) {
    if (out.size() <= e[0]) out.resize(e[0] + 1, Rational(0));
    out[e[0]] = c;
  }
  return out;
}

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_terms, int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(0, max_exp), num(-max_coeff, max_coeff), den(1, max_coeff);
  Polynomial p(nvars);
  for (int t = terms(rng); t > 0; --t) {
    Exponents e(nvars);
    for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
    p.add_term(e, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("gcd over Int and Q[x]") {
  CHECK(gcd(Integer(6), Integer(10), Z) == RingElement(Integer(2)));
  CHECK(gcd(Integer(-6), Integer(10), Z) == RingElement(Integer(2)));
  CHECK(gcd(Integer(0), Integer(0), Z) == RingElement(Integer(0)));
  const RingElement a = poly("(x-3)*(x-5)", Qx), b = poly("(x-3)*(x-7)", Qx);
  CHECK(gcd(a, b, Qx) == poly("x-3", Qx));
  CHECK_THROWS_AS(gcd(poly("x", Qxy), poly("y", Qxy), Qxy), Error);
  CHECK_THROWS_AS(gcd(Residue{2, 6}, Residue{3, 6}, RingDescriptor::integers_mod(6)), Error);
}

TEST_CASE("extended gcd satisfies Bezout") {
  auto check = [](const RingElement& a, const RingElement& b, const RingDescriptor& r, const RingElement& expect) {
    const auto [g, u, v] = extended_gcd(a, b, r);
    CHECK(g == expect);
    CHECK(u * a + v * b == g);
  };
  check(Integer(3), Integer(5), Z, Integer(1));
  check(Integer(0), Integer(7), Z, Integer(7));
  check(Integer(-4), Integer(6), Z, Integer(2));
  check(poly("x-1", Qx), poly("x+1", Qx), Qx, poly("1", Qx));
  const auto [g, u, v] = extended_gcd(poly("x-1", Qx), poly("x+1", Qx), Qx);
  CHECK(u == poly("-1/2", Qx));
  CHECK(v == poly("1/2", Qx));
}

TEST_CASE("gcd agrees with a dense Euclid oracle on random univariate polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Polynomial common = random_poly(rng, 1, 2, 2, 5);
    const Polynomial a = random_poly(rng, 1, 3, 3, 9) * common;
    const Polynomial b = random_poly(rng, 1, 3, 3, 9) * common;
    const RingElement g = gcd(a, b, Qx);
    const Uni expect = uni_gcd(to_uni(a), to_uni(b));
    CHECK(to_uni(g.is_zero() ? Polynomial(1) : g.polynomial()) == expect);
    if (!g.is_zero()) {
      CHECK(exact_divide(a, g, Qx).has_value());
      CHECK(exact_divide(b, g, Qx).has_value());
    }
    const auto [g2, u, v] = extended_gcd(a, b, Qx);
    CHECK(g2 == g);
    CHECK(u * RingElement(a) + v * RingElement(b) == g);
  }
}

TEST_CASE("integer gcd properties") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> d(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    const Integer a = d(rng), b = d(rng);
    const RingElement g = gcd(a, b, Z);
    if (!g.is_zero()) {
      CHECK(exact_divide(a, g, Z).has_value());
      CHECK(exact_divide(b, g, Z).has_value());
      CHECK(g.integer() > 0);
    }
    const auto [g2, u, v] = extended_gcd(a, b, Z);
    CHECK(g2 == g);
    CHECK(u * RingElement(a) + v * RingElement(b) == g);
  }
}

TEST_CASE("exact division") {
  CHECK(exact_divide(poly("x^2-9", Qx), poly("x-3", Qx), Qx) == poly("x+3", Qx));
  const RingElement label = poly("(x-3)*((x-10)^2+y^2-1)", Qxy);
  CHECK(exact_divide(label, poly("(x-10)^2+y^2-1", Qxy), Qxy) == poly("x-3", Qxy));
  CHECK_FALSE(exact_divide(poly("x+1", Qxy), poly("y", Qxy), Qxy).has_value());
  CHECK_FALSE(exact_divide(Integer(7), Integer(2), Z).has_value());
  CHECK_THROWS_AS(exact_divide(Integer(7), Integer(0), Z), Error);
  CHECK(exact_divide(Residue{4, 6}, Residue{2, 6}, RingDescriptor::integers_mod(6)).has_value());
  CHECK_FALSE(exact_divide(Residue{3, 6}, Residue{2, 6}, RingDescriptor::integers_mod(6)).has_value());
}

TEST_CASE("exact_divide(a*b, b) == a on random bivariate polynomials") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_poly(rng, 2, 4, 3, 20);
    Polynomial b = random_poly(rng, 2, 4, 3, 20);
    if (b.is_zero()) b = Polynomial::constant(1, 2);
    const auto q = exact_divide(a * b, b, Qxy);
    REQUIRE(q.has_value());
    CHECK(*q == RingElement(a));
    CHECK(to_dense(a * b) == dense_mul(to_dense(a), to_dense(b)));
  }
}

TEST_CASE("univariate division matches the dense long-division oracle") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_poly(rng, 1, 6, 5, 30);
    Polynomial b = random_poly(rng, 1, 3, 3, 30);
    if (b.is_zero()) continue;
    const auto [q, r] = divide(a, b);
    const auto [eq, er] = uni_divmod(to_uni(a), to_uni(b));
    CHECK(to_uni(q) == eq);
    CHECK(to_uni(r) == er);
  }
}

TEST_CASE("associates") {
  CHECK(is_associate(Integer(-5), Integer(5), Z));
  CHECK(is_associate(poly("2*x-6", Qx), poly("x-3", Qx), Qx));
  CHECK_FALSE(is_associate(poly("x-3", Qx), poly("x-5", Qx), Qx));
  CHECK(normalize_associate(Integer(-12), Z) == RingElement(Integer(12)));
  CHECK(normalize_associate(poly("-3*x^2+6", Qx), Qx) == poly("x^2-2", Qx));
}

TEST_CASE("parse the hexagon label into its expansion") {
  // Expansion by the dense oracle, frozen: x^3 + x*y^2 - 23*x^2 - 3*y^2 + 159*x - 297.
  const Dense line{{{1, 0}, 1}, {{0, 0}, -3}};
  const Dense circle{{{2, 0}, 1}, {{1, 0}, -20}, {{0, 0}, 99}, {{0, 2}, 1}};
  const Dense expect{{{3, 0}, 1}, {{1, 2}, 1}, {{2, 0}, -23}, {{0, 2}, -3}, {{1, 0}, 159}, {{0, 0}, -297}};
  REQUIRE(dense_mul(line, circle) == expect);
  const RingElement p = poly("(x-3)*((x-10)^2+y^2-1)", Qxy);
  CHECK(to_dense(p.polynomial()) == expect);
  CHECK(p.polynomial().leading_monomial() == Exponents{3, 0});
  CHECK(format_element(p, Qxy) == "x^3 + x*y^2 - 23*x^2 - 3*y^2 + 159*x - 297");
}

TEST_CASE("parse simple forms") {
  CHECK(poly("0", Qxy).is_zero());
  const RingElement p = poly("3*x^2*y - 1/2", Qxy);
  const Dense expect{{{2, 1}, 3}, {{0, 0}, Rational(-1, 2)}};
  CHECK(to_dense(p.polynomial()) == expect);
  CHECK(poly(" ( x + 1 ) ^ 2 ", Qx) == poly("x^2+2*x+1", Qx));
  CHECK(poly("-x^2", Qx) == poly("x^2", Qx));  // unary minus binds to the base
  CHECK(poly("-(x^2)", Qx) == poly("-1*x^2", Qx));
  CHECK(parse_element("-12", Z) == RingElement(Integer(-12)));
  CHECK(parse_element("17", RingDescriptor::integers_mod(5)) == RingElement(Residue{2, 5}));
}

TEST_CASE("parse errors name the position") {
  try {
    parse_element("x + * 2", Qx);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_element("2 x", Qx), ParseError);  // adjacency is not multiplication
  CHECK_THROWS_AS(parse_element("(x+1", Qx), ParseError);
  CHECK_THROWS_AS(parse_element("1/0", Qx), Error);
  CHECK_THROWS_AS(parse_element("x/2", Z), Error);
  CHECK_THROWS_AS(parse_element("1/2", Z), ParseError);
  try {
    parse_element("z + 1", Qxy);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
}

TEST_CASE("format then parse is the identity on random canonical polynomials") {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = random_poly(rng, 2, 6, 5, 100);
    const std::string text = format_element(p, Qxy);
    const RingElement back = parse_element(text, Qxy);
    CHECK_MESSAGE(back == RingElement(p), text);
    CHECK(format_element(back, Qxy) == text);
  }
}

TEST_CASE("factors") {
  CHECK(make_factor(Integer(-7), 2, Z).element == RingElement(Integer(7)));
  CHECK(make_factor(Integer(7), 1, Z).irreducibility == Irreducibility::Verified);
  CHECK_THROWS_AS(make_factor(Integer(6), 1, Z), Error);
  CHECK_THROWS_AS(make_factor(Integer(1), 1, Z), Error);
  CHECK_THROWS_AS(make_factor(poly("x^2-4", Qx), 1, Qx), Error);
  CHECK(make_factor(poly("x^2+1", Qx), 1, Qx).irreducibility == Irreducibility::Verified);
  CHECK(make_factor(poly("2*x-6", Qx), 1, Qx).element == poly("x-3", Qx));
  CHECK(make_factor(poly("(x-10)^2+y^2-1", Qxy), 1, Qxy).irreducibility == Irreducibility::Declared);
  CHECK(is_probable_prime(Integer(1000000007)));
  CHECK_FALSE(is_probable_prime(Integer(561)));
  const FactoredElement f = factor_integer(Integer(360));
  CHECK(expand(f, Z) == RingElement(Integer(360)));
  CHECK(format_factored(f, Z) == "2^3*3^2*5");
}

TEST_CASE("trivializes") {
  FactoredElement six = factor_integer(Integer(6));
  RingDescriptor r = Z;
  r.inverted = {make_factor(Integer(3), 1, Z)};
  CHECK_FALSE(trivializes(six, r));
  r.inverted.push_back(make_factor(Integer(2), 1, Z));
  CHECK(trivializes(six, r));
  CHECK_FALSE(trivializes(FactoredElement::zero(), r));
}

TEST_CASE("trivializes is monotone in the inverted set") {
  std::mt19937 rng(29);
  const int primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 5), coin(0, 1);
  for (int i = 0; i < 300; ++i) {
    long long value = 1;
    for (int k = pick(rng); k >= 0; --k) value *= primes[pick(rng)];
    const FactoredElement label = factor_integer(Integer(value));
    RingDescriptor r = Z;
    bool before = trivializes(label, r);
    for (int p : primes) {
      if (!coin(rng)) continue;
      r.inverted.push_back(make_factor(Integer(p), 1, Z));
      const bool after = trivializes(label, r);
      CHECK((!before || after));
      before = after;
    }
  }
}

TEST_CASE("is_unit respects localization") {
  RingDescriptor r = Z;
  CHECK(is_unit(Integer(-1), r));
  CHECK_FALSE(is_unit(Integer(6), r));
  r.inverted = {make_factor(Integer(2), 1, Z), make_factor(Integer(3), 1, Z)};
  CHECK(is_unit(Integer(-12), r));
  CHECK_FALSE(is_unit(Integer(10), r));
  CHECK(is_unit(poly("-4", Qx), Qx));
  CHECK_FALSE(is_unit(poly("0", Qx), Qx));
}

TEST_CASE("ring descriptors") {
  CHECK_THROWS_AS(RingDescriptor::integers_mod(1).validate(), Error);
  CHECK_THROWS_AS(RingDescriptor::polynomials({"x", "x"}).validate(), Error);
  CHECK_THROWS_AS(RingDescriptor::polynomials({}).validate(), Error);
  RingDescriptor m = RingDescriptor::integers_mod(6);
  m.inverted = {make_factor(Integer(5), 1, Z)};
  CHECK_THROWS_AS(m.validate(), Error);
  CHECK(format_ring(RingDescriptor::integers_mod(15)) == "ModInt(15)");
  CHECK(format_ring(Qxy) == "PolyQ(x,y)");
}

TEST_CASE("residues stay in range and mixing rings throws") {
  const RingElement a = Residue{-1, 7};
  CHECK(a.residue().value == 6);
  CHECK((RingElement(Residue{5, 7}) + RingElement(Residue{4, 7})) == RingElement(Residue{2, 7}));
  CHECK_THROWS_AS(RingElement(Residue{1, 7}) + RingElement(Residue{1, 5}), Error);
  CHECK_THROWS_AS(RingElement(Integer(1)) + poly("x", Qx), Error);
}
