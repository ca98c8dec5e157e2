#pragma once

#include "gspline/graph.hpp"
#include "gspline/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gspline {

/// One value per graph vertex, in the graph's declaration order.
struct Spline {
  std::vector<RingElement> values;

  friend bool operator==(const Spline&, const Spline&) = default;
};

using GeneratorMatrix = std::vector<std::vector<RingElement>>;

/// Flow-up (Hermite-reduced, triangular) basis of the spline module.
///
/// Columns are read in `vertex_order`. basis[i] vanishes on the vertices
/// vertex_order[0 .. pivots[i]) and has leading entry leading[i] at
/// vertex_order[pivots[i]]; pivots are strictly increasing. Over Int and
/// univariate PolyQ leading entries are positive / monic and every entry
/// above a leading entry is reduced modulo it. For ModInt graphs the rows
/// are the integer Hermite basis reduced mod n with vanishing rows dropped.
struct SplineModule {
  RingDescriptor ring;
  std::vector<std::string> vertices;
  std::vector<std::size_t> vertex_order;
  std::vector<Spline> basis;
  std::vector<std::size_t> pivots;
  std::vector<RingElement> leading;

  std::size_t rank() const { return basis.size(); }

  friend bool operator==(const SplineModule&, const SplineModule&) = default;
};

struct LimitStep {
  enum class Kind { LeafPullback, EdgeEqualizer };
  Kind kind = Kind::LeafPullback;
  std::string first;   // LeafPullback: new vertex; EdgeEqualizer: u
  std::string second;  // LeafPullback: attach vertex; EdgeEqualizer: v
  FactoredElement label;
  std::vector<std::string> vertices;  // vertices built so far, in insertion order
  GeneratorMatrix generators;         // rows over `vertices` after this step
};

/// The construction order of the limit: one step per inserted edge.
struct LimitTrace {
  std::string start;
  std::vector<LimitStep> steps;
};

/// s(u) - s(v) lies in the label ideal for every edge.
bool gkm_check(const EdgeLabeledGraph& g, const Spline& s);

/// The generator of the label ideal used for solving. Inverted factors are
/// units and are skipped. Over ModInt the label is lifted to the integer
/// generator of (label) + (n), i.e. gcd(label, n) with 0 lifted to n.
RingElement solving_generator(const FactoredElement& label, const RingDescriptor& ring);

/// Ring in which the Hermite computations run (Int for ModInt graphs).
RingDescriptor solving_ring(const RingDescriptor& ring);

/// Hermite-reduces `generators` (rows indexed by vertex) into flow-up form.
SplineModule flow_up_normalize(const RingDescriptor& ring, const std::vector<std::string>& vertices,
                               GeneratorMatrix generators, std::vector<std::size_t> vertex_order);

/// Kernel of the block system (incidence | -diag(labels)) over R^(V+E),
/// projected onto the vertex coordinates, per connected component.
SplineModule solve_direct(const EdgeLabeledGraph& g,
                          std::optional<std::vector<std::size_t>> vertex_order = std::nullopt);

/// An edge order in which every edge touches the part already built:
/// repeatedly the first listed edge adjacent to it.
std::vector<std::size_t> default_edge_order(const EdgeLabeledGraph& g);

/// Builds the module as iterated pullbacks (new leaf vertex) and equalizers
/// (edge between built vertices), following `edge_order` (indices into
/// g.edges()). The graph must be connected.
std::pair<SplineModule, LimitTrace> build_incremental(
    const EdgeLabeledGraph& g, const std::vector<std::size_t>& edge_order,
    std::optional<std::vector<std::size_t>> vertex_order = std::nullopt);

/// Largest labeling space enumerate_bruteforce accepts.
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Every GKM labeling in (Z/n)^V as a mixed-radix code (first vertex most
/// significant), ascending. Throws TooLarge above kBruteForceLimit.
std::vector<std::uint64_t> enumerate_codes(const EdgeLabeledGraph& g);

std::vector<Spline> enumerate_bruteforce(const EdgeLabeledGraph& g);

/// Codes of the Z/n-span of a ModInt module's basis, ascending.
std::vector<std::uint64_t> span_codes(const SplineModule& m);

Spline decode_spline(std::uint64_t code, const RingDescriptor& ring, std::size_t vertex_count);

/// Element of the (possibly localized) base ring written as num/den.
struct Fraction {
  RingElement num;
  RingElement den;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct Membership {
  bool member = false;
  std::vector<Fraction> coefficients;  // one per basis element when member
};

/// Back-substitution along the triangular basis. Over a localized ring the
/// coefficients may carry denominators built from inverted factors.
Membership membership(const SplineModule& m, const Spline& s);

/// sum_i c_i * basis[i], for checking membership witnesses. Requires unit
/// denominators after clearing; throws otherwise.
Spline recombine(const SplineModule& m, const std::vector<Fraction>& coefficients);

/// The same lattice viewed over the localization at `invert`.
SplineModule localize(const SplineModule& m, const std::vector<Factor>& invert);

Spline constant_spline(const RingElement& r, std::size_t vertex_count);

std::string render_text(const SplineModule& m);
std::string render_text(const LimitTrace& t, const RingDescriptor& ring);

}  // namespace gspline
