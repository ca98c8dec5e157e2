#include "hermite.hpp"

#include <algorithm>

namespace gspline::detail {

Vec combine(const RingElement& a, const Vec& x, const RingElement& b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) out[i] = b * y[i];
    else if (y[i].is_zero()) out[i] = a * x[i];
    else out[i] = a * x[i] + b * y[i];
  }
  return out;
}

bool is_zero_vector(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElement& e) { return e.is_zero(); });
}

namespace {

/// Replaces (x, y) by (u x + v y, -(b/g) x + (a/g) y) where a = x[k], b = y[k]:
/// a unimodular step that leaves gcd(a, b) in x[k] and 0 in y[k].
void eliminate(Vec& x, Vec& y, std::size_t k, const RingDescriptor& ring) {
  const RingElement a = x[k];
  const RingElement b = y[k];
  auto [g, u, v] = extended_gcd(a, b, ring);
  const RingElement a_g = *exact_divide(a, g, ring);
  const RingElement b_g = *exact_divide(b, g, ring);
  Vec nx = combine(u, x, v, y);
  Vec ny = combine(-b_g, x, a_g, y);
  x = std::move(nx);
  y = std::move(ny);
}

/// Multiplies v by the unit that turns v[k] into its normalized associate.
void normalize_unit(Vec& v, std::size_t k, const RingDescriptor& ring) {
  const RingElement& lead = v[k];
  if (lead.is_integer()) {
    if (lead.integer() < 0) {
      for (auto& e : v) e = -e;
    }
    return;
  }
  const Rational lc = lead.polynomial().leading_coefficient();
  if (lc == 1) return;
  const RingElement scale = Polynomial::constant(Rational(1) / lc, ring.variables.size());
  for (auto& e : v) e = e * scale;
}

}  // namespace

Echelon row_hermite(std::vector<Vec> rows, const std::vector<std::size_t>& column_order,
                    const RingDescriptor& ring) {
  Echelon out;
  std::erase_if(rows, is_zero_vector);
  std::size_t r = 0;
  for (std::size_t pos = 0; pos < column_order.size() && r < rows.size(); ++pos) {
    const std::size_t col = column_order[pos];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      if (rows[r][col].is_zero()) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      eliminate(rows[r], rows[i], col, ring);
    }
    if (rows[r][col].is_zero()) continue;
    normalize_unit(rows[r], col, ring);
    for (std::size_t j = 0; j < r; ++j) {
      if (rows[j][col].is_zero()) continue;
      auto [q, rem] = euclidean_divmod(rows[j][col], rows[r][col], ring);
      if (!q.is_zero()) rows[j] = combine(ring.one(), rows[j], -q, rows[r]);
    }
    out.pivot_positions.push_back(pos);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<Vec> kernel_basis(const std::vector<Vec>& matrix, std::size_t ncols, const RingDescriptor& ring) {
  const std::size_t m = matrix.size();
  // Column j of [A ; I] as one vector of length m + ncols.
  std::vector<Vec> cols(ncols, Vec(m + ncols, ring.zero()));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) cols[j][i] = matrix[i][j];
    cols[j][m + j] = ring.one();
  }
  std::size_t p = 0;
  for (std::size_t row = 0; row < m && p < ncols; ++row) {
    for (std::size_t c = p + 1; c < ncols; ++c) {
      if (cols[c][row].is_zero()) continue;
      if (cols[p][row].is_zero()) {
        std::swap(cols[p], cols[c]);
        continue;
      }
      eliminate(cols[p], cols[c], row, ring);
    }
    if (!cols[p][row].is_zero()) ++p;
  }
  std::vector<Vec> kernel;
  for (std::size_t c = p; c < ncols; ++c) kernel.emplace_back(cols[c].begin() + static_cast<std::ptrdiff_t>(m), cols[c].end());
  return kernel;
}

}  // namespace gspline::detail
