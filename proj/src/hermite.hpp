#pragma once

// Hermite-style reductions over a Euclidean ring (Int or univariate PolyQ).

#include "gspline/ring.hpp"

#include <vector>

namespace gspline::detail {

using Vec = std::vector<RingElement>;

/// Row echelon form in the given column order: pivot rows with normalized
/// leading entries and every entry above a pivot reduced modulo it.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivot_positions;  // index into column_order
};

Echelon row_hermite(std::vector<Vec> rows, const std::vector<std::size_t>& column_order,
                    const RingDescriptor& ring);

/// Basis of { x in R^ncols : A x = 0 } by unimodular column reduction of
/// [A ; I]. `matrix` holds the rows of A.
std::vector<Vec> kernel_basis(const std::vector<Vec>& matrix, std::size_t ncols, const RingDescriptor& ring);

/// a*x + b*y, elementwise.
Vec combine(const RingElement& a, const Vec& x, const RingElement& b, const Vec& y);

bool is_zero_vector(const Vec& v);

}  // namespace gspline::detail
