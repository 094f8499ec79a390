#pragma once

// Naive reference computations, written independently of the library algorithms.

#include "lierad/lie_algebra.hpp"

#include <vector>

namespace oracle {

using lierad::LieAlgebra;
using lierad::Scalar;
using lierad::Vector;

/// Rank by plain forward elimination on a copy of the rows.
inline std::size_t rank(std::vector<Vector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c].is_zero()) continue;
      Scalar f = rows[q][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] = rows[q][k] - f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// [x, y] expanded straight from the structure constants.
inline Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y) {
  const std::size_t n = l.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + x[i] * y[j] * l.structure(i, j)[k];
    }
  }
  return out;
}

/// Jacobi residual [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] for a raw table.
inline Vector jacobi_residual(const std::vector<Vector>& table, std::size_t n, std::size_t i, std::size_t j,
                              std::size_t k) {
  auto br = [&](const Vector& x, std::size_t b) {
    Vector out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t t = 0; t < n; ++t) out[t] = out[t] + x[a] * table[a * n + b][t];
    return out;
  };
  Vector r = br(table[i * n + j], k);
  Vector s = br(table[j * n + k], i);
  Vector u = br(table[k * n + i], j);
  for (std::size_t t = 0; t < n; ++t) r[t] = r[t] + s[t] + u[t];
  return r;
}

/// ad(x) as a list of columns, ad(x)^n, and the zero test.
inline bool ad_nilpotent(const LieAlgebra& l, const Vector& x) {
  const std::size_t n = l.dim();
  for (std::size_t j = 0; j < n; ++j) {
    Vector v(n);
    v[j] = 1;
    for (std::size_t p = 0; p < n; ++p) v = bracket(l, x, v);
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  }
  return true;
}

inline std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0, p = 1;
  while (p < n) {
    p *= 2;
    ++k;
  }
  return k;
}

}  // namespace oracle
