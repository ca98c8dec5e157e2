#pragma once

#include "gspline/graph.hpp"
#include "gspline/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gspline {

/// The basic open where every listed factor becomes a unit.
struct BasicOpen {
  std::string name;
  std::vector<Factor> invert;
};

struct CoverStatus {
  enum class Kind { Covers, FailsToCover, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<RingElement> common_factor;  // FailsToCover
  std::string reason;                        // Inconclusive
  std::string witness;                       // Covers: how the unit ideal was reached
};

const char* to_string(CoverStatus::Kind k);

enum class Verdict { FREE, NOT_APPLICABLE, UNKNOWN };

const char* to_string(Verdict v);

/// Canonical, pairwise non-associate factors; throws Schema on an empty list.
BasicOpen make_open(std::string name, const std::vector<RingElement>& invert, const RingDescriptor& ring);

/// Decides whether the products f_i of the opens' factors generate the unit
/// ideal of the base ring. Exact over Int and univariate PolyQ; over several
/// variables a univariate witness or a shared factor decides, else
/// Inconclusive.
CoverStatus check_cover(const RingDescriptor& ring, const std::vector<BasicOpen>& opens);

struct OpenResult {
  std::string name;
  std::vector<Factor> invert;
  RestrictionOutcome outcome;
};

std::vector<OpenResult> classify_restrictions(const EdgeLabeledGraph& g, const std::vector<BasicOpen>& opens);

struct CertificateReport {
  RingDescriptor ring;
  std::vector<OpenResult> opens;  // empty for ModInt graphs
  CoverStatus cover;
  Verdict verdict = Verdict::UNKNOWN;
  std::vector<std::string> notes;
};

CertificateReport verify_certificate(const EdgeLabeledGraph& g, const std::vector<BasicOpen>& opens);

std::string render_text(const CoverStatus& c, const RingDescriptor& ring);
std::string render_text(const CertificateReport& r);

}  // namespace gspline
