#pragma once

#include "gspline/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gspline {

/// Element of Z/n, always held in [0, modulus).
struct Residue {
  Integer value;
  Integer modulus;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Tagged ring value: integer, residue, or sparse rational polynomial.
class RingElement {
 public:
  using Value = std::variant<Integer, Residue, Polynomial>;

  RingElement() : value_(Integer(0)) {}
  RingElement(Integer i) : value_(std::move(i)) {}  // NOLINT(google-explicit-constructor)
  RingElement(Residue r);                           // NOLINT(google-explicit-constructor)
  RingElement(Polynomial p) : value_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  const Value& value() const { return value_; }
  bool is_integer() const { return std::holds_alternative<Integer>(value_); }
  bool is_residue() const { return std::holds_alternative<Residue>(value_); }
  bool is_polynomial() const { return std::holds_alternative<Polynomial>(value_); }
  const Integer& integer() const { return std::get<Integer>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(value_); }

  bool is_zero() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);

 private:
  Value value_;
};

/// Deterministic total order used for sorting factors and reports: integers
/// numerically, polynomials by grlex term sequence.
bool canonical_less(const RingElement& a, const RingElement& b);

enum class RingKind { Int, ModInt, PolyQ };

enum class Irreducibility { Verified, Declared };

/// An irreducible factor in normalized-associate form with its multiplicity.
struct Factor {
  RingElement element;
  unsigned multiplicity = 1;
  Irreducibility irreducibility = Irreducibility::Declared;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.element == b.element && a.multiplicity == b.multiplicity;
  }
};

struct RingDescriptor {
  RingKind kind = RingKind::Int;
  Integer modulus = 0;                 // ModInt only
  std::vector<std::string> variables;  // PolyQ only
  std::vector<Factor> inverted;        // localization; sorted, pairwise non-associate

  static RingDescriptor integers();
  static RingDescriptor integers_mod(const Integer& n);
  static RingDescriptor polynomials(std::vector<std::string> variables);

  /// Validates the descriptor invariants; throws Error on violation.
  void validate() const;

  bool is_localized() const { return !inverted.empty(); }
  /// Int or univariate PolyQ: the rings where gcd and Hermite reduction apply.
  bool is_euclidean() const;
  /// Same kind, modulus and variables; ignores the inverted set.
  bool same_base(const RingDescriptor& other) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(const Integer& i) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
};

/// Principal ideal generator in factored form. An empty factor list with
/// is_zero == false is the unit ideal.
struct FactoredElement {
  std::vector<Factor> factors;
  bool is_zero = false;

  static FactoredElement zero() { return {{}, true}; }
  static FactoredElement unit() { return {{}, false}; }
  bool is_unit() const { return !is_zero && factors.empty(); }

  friend bool operator==(const FactoredElement&, const FactoredElement&) = default;
};

// --- arithmetic -----------------------------------------------------------

bool is_unit(const RingElement& a, const RingDescriptor& ring);

/// Normalized associate: positive integer, monic polynomial; residues unchanged.
RingElement normalize_associate(const RingElement& a, const RingDescriptor& ring);

bool is_associate(const RingElement& a, const RingElement& b, const RingDescriptor& ring);

/// Euclidean division for Int (remainder in [0, |b|)) and univariate
/// polynomials (or polynomials confined to one common variable).
std::pair<RingElement, RingElement> euclidean_divmod(const RingElement& a, const RingElement& b,
                                                     const RingDescriptor& ring);

RingElement gcd(const RingElement& a, const RingElement& b, const RingDescriptor& ring);

struct ExtendedGcd {
  RingElement g, u, v;  // u*a + v*b == g
};
ExtendedGcd extended_gcd(const RingElement& a, const RingElement& b, const RingDescriptor& ring);

/// q with q*b == a, or nullopt when b does not divide a.
std::optional<RingElement> exact_divide(const RingElement& a, const RingElement& b,
                                        const RingDescriptor& ring);

/// Euclidean "size" used for Hermite reduction: |a| for Int, degree for PolyQ.
/// Only meaningful for comparisons within one ring.
Integer euclidean_size(const RingElement& a);

// --- factors --------------------------------------------------------------

/// Builds a validated Factor: normalizes the element, checks it is a nonzero
/// nonunit, primality-checks integers and checks univariate polynomials of
/// degree <= 2 for irreducibility over Q.
Factor make_factor(const RingElement& element, unsigned multiplicity, const RingDescriptor& ring);

/// Deterministic Miller-Rabin (proven correct below 3.3e24).
bool is_probable_prime(const Integer& n);

/// Trial-division factorization of a nonzero integer into a FactoredElement.
FactoredElement factor_integer(const Integer& n);

/// Sorts factors canonically and merges associates by adding multiplicities.
FactoredElement canonicalize(FactoredElement f, const RingDescriptor& ring);

/// Expanded generator (product of factors with multiplicities; 0 for zero).
RingElement expand(const FactoredElement& f, const RingDescriptor& ring);

/// True iff the principal ideal becomes the unit ideal once ring.inverted is
/// inverted. The zero ideal never trivializes.
bool trivializes(const FactoredElement& label, const RingDescriptor& ring);

// --- text -----------------------------------------------------------------

RingElement parse_element(std::string_view text, const RingDescriptor& ring);
std::string format_element(const RingElement& a, const RingDescriptor& ring);
std::string format_factored(const FactoredElement& f, const RingDescriptor& ring);
std::string format_ring(const RingDescriptor& ring);

}  // namespace gspline
