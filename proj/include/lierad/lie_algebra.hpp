#pragma once

#include "lierad/errors.hpp"
#include "lierad/subspace.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lierad {

/// One supplied structure constant: [b_i, b_j] = coeffs.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// Finite-dimensional Lie algebra over Q(i) given by structure constants.
///
/// Values are immutable and cheap to copy. Every instance has passed the
/// antisymmetry and Jacobi checks.
class LieAlgebra {
public:
  LieAlgebra() : LieAlgebra("zero", {}, {}) {}

  /// table[i * dim + j] holds the coordinates of [b_i, b_j].
  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Vector> table) {
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->dim = labels.size();
    d->labels = std::move(labels);
    d->table = std::move(table);
    validate(*d);
    d->ads.reserve(d->dim);
    for (std::size_t i = 0; i < d->dim; ++i) {
      Matrix a(d->dim, d->dim);
      for (std::size_t j = 0; j < d->dim; ++j)
        for (std::size_t k = 0; k < d->dim; ++k) a(k, j) = d->table[i * d->dim + j][k];
      d->ads.push_back(std::move(a));
    }
    data_ = std::move(d);
  }

  const std::string& name() const { return data_->name; }
  std::size_t dim() const { return data_->dim; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }

  /// [b_i, b_j]
  const Vector& structure(std::size_t i, std::size_t j) const { return data_->table[i * dim() + j]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length mismatch");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero() || i == j) continue;
        const Vector& c = structure(i, j);
        Scalar f = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) out[k].add_mul(f, c[k]);
      }
    }
    return out;
  }

  /// ad(b_i): column j is [b_i, b_j].
  const Matrix& ad_basis(std::size_t i) const { return data_->ads.at(i); }

  Matrix ad(const Vector& x) const {
    if (x.size() != dim()) throw DimensionError("ad: vector length mismatch");
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      const Matrix& a = ad_basis(i);
      for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
          if (!a(r, c).is_zero()) m(r, c).add_mul(x[i], a(r, c));
    }
    return m;
  }

  LieAlgebra renamed(std::string name) const {
    LieAlgebra copy = *this;
    auto d = std::make_shared<Data>(*data_);
    d->name = std::move(name);
    copy.data_ = std::move(d);
    return copy;
  }

  bool is_abelian() const {
    for (const auto& v : data_->table)
      if (!lierad::is_zero(v)) return false;
    return true;
  }

  /// Same structure constants (names and labels are ignored).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim() == b.dim() && a.data_->table == b.data_->table;
  }

private:
  struct Data {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<Vector> table;
    std::vector<Matrix> ads;
  };

  static void validate(const Data& d) {
    const std::size_t n = d.dim;
    if (d.table.size() != n * n) throw DimensionError("structure table has wrong size");
    for (const auto& v : d.table)
      if (v.size() != n) throw DimensionError("structure constant vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if (!lierad::is_zero(d.table[i * n + i])) throw InconsistentEntry(i, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector& a = d.table[i * n + j];
        const Vector& b = d.table[j * n + i];
        for (std::size_t k = 0; k < n; ++k)
          if (!(a[k] + b[k]).is_zero()) throw InconsistentEntry(i, j);
      }
    }
    // [[b_i,b_j],b_k] expanded through the nonzero table entries
    std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> nz(n * n);
    for (std::size_t p = 0; p < n * n; ++p)
      for (std::size_t k = 0; k < n; ++k)
        if (!d.table[p][k].is_zero()) nz[p].emplace_back(k, &d.table[p][k]);
    Vector acc(n);
    std::vector<std::size_t> touched;
    auto add = [&](std::size_t p, std::size_t k) {
      for (const auto& [l, c] : nz[p])
        for (const auto& [m, e] : nz[l * n + k]) {
          acc[m].add_mul(*c, *e);
          touched.push_back(m);
        }
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          add(i * n + j, k);
          add(j * n + k, i);
          add(k * n + i, j);
          for (std::size_t m : touched)
            if (!acc[m].is_zero()) throw JacobiViolation(i, j, k, acc);
          for (std::size_t m : touched) acc[m] = Scalar();
          touched.clear();
        }
  }

  std::shared_ptr<const Data> data_;
};

/// Builds and validates an algebra from a sparse bracket list.
///
/// Entries with i > j are folded in by antisymmetry; a pair given in both
/// orders must agree up to sign.
inline LieAlgebra make_algebra(std::string name, std::size_t dim, std::vector<std::string> labels,
                               const std::vector<BracketEntry>& entries) {
  if (labels.empty() && dim > 0)
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("b" + std::to_string(k));
  if (labels.size() != dim) throw DimensionError("label count does not match dimension");
  std::vector<Vector> table(dim * dim, Vector(dim));
  std::vector<bool> given(dim * dim, false);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) throw DimensionError("bracket index out of range");
    if (e.coeffs.size() != dim) throw DimensionError("bracket coefficient vector has wrong length");
    if (e.i == e.j) {
      if (!is_zero(e.coeffs)) throw InconsistentEntry(e.i, e.j);
      continue;
    }
    std::size_t a = e.i * dim + e.j, b = e.j * dim + e.i;
    if (given[b]) {
      if (!is_zero(e.coeffs + table[b])) throw InconsistentEntry(e.i, e.j);
    } else if (given[a]) {
      if (e.coeffs != table[a]) throw InconsistentEntry(e.i, e.j);
    }
    table[a] = e.coeffs;
    table[b] = Scalar(-1) * e.coeffs;
    given[a] = given[b] = true;
  }
  return LieAlgebra(std::move(name), std::move(labels), std::move(table));
}

inline LieAlgebra abelian_algebra(std::size_t n, std::string name = {}) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("a" + std::to_string(k + 1));
  return LieAlgebra(name.empty() ? "abelian(" + std::to_string(n) + ")" : std::move(name), std::move(labels),
                    std::vector<Vector>(n * n, Vector(n)));
}

}  // namespace lierad
