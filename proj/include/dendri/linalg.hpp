#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, rank,
// nullspace and subspace comparisons. Row vectors throughout.

#include <cstddef>
#include <utility>
#include <vector>

#include "dendri/error.hpp"
#include "dendri/rational.hpp"

namespace dendri {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Reduced row echelon form of a row set. `rows` holds only the nonzero rows;
/// pivots[k] is the pivot column of rows[k]. The RREF of a subspace is unique,
/// so pivots and rows depend only on the span.
struct Echelon {
  std::size_t cols = 0;
  Matrix rows;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return rows.size(); }

  /// Reduces v against the rows; the result is zero iff v lies in the span.
  [[nodiscard]] Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational c = v[pivots[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[k][j] != 0) v[j] -= c * rows[k][j];
    }
    return v;
  }

  [[nodiscard]] bool contains(const Vec& v) const { return is_zero(reduce(v)); }
};

inline Echelon rref(Matrix m, std::size_t cols) {
  for (const auto& r : m)
    if (r.size() != cols) throw DimensionError("rref: row length mismatch");
  Echelon e;
  e.cols = cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t p = lead;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[lead], m[p]);
    const Rational inv = 1 / m[lead][c];
    for (std::size_t j = c; j < cols; ++j) m[lead][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[lead][j] != 0) m[r][j] -= f * m[lead][j];
    }
    e.pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  e.rows = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).rank(); }

/// Basis of {x : m x = 0}, one vector per free column (free entry 1).
inline Matrix nullspace(const Matrix& m, std::size_t cols) {
  const Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) x[e.pivots[k]] = -e.rows[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

inline bool subspace_contains(const Echelon& big, const Echelon& small) {
  for (const auto& r : small.rows)
    if (!big.contains(r)) return false;
  return true;
}

inline bool same_subspace(const Echelon& a, const Echelon& b) {
  return a.cols == b.cols && a.rows == b.rows && a.pivots == b.pivots;
}

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

}  // namespace dendri
