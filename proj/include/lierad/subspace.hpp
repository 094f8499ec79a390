#pragma once

#include "lierad/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lierad {

/// Linear subspace of Q(i)^n held in reduced row-echelon form.
///
/// The representation is canonical: two values compare equal exactly when
/// they span the same subspace of the same ambient space.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace whole(std::size_t ambient) { return from_rref(rref(Matrix::identity(ambient))); }

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient) {
    return from_rref(rref(Matrix::from_rows(vectors, ambient)));
  }
  static Subspace row_space(const Matrix& m) { return from_rref(rref(m)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_whole() const { return pivots_.size() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  Vector basis_vector(std::size_t k) const { return basis_.row_vector(k); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Ambient coordinates not used as pivots: the standard complement.
  std::vector<std::size_t> free_coordinates() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// x minus its component along the basis; zero exactly on pivot coordinates.
  Vector reduce(Vector x) const {
    check(x.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      if (x[pivots_[k]].is_zero()) continue;
      Scalar f = x[pivots_[k]];
      auto r = basis_.row(k);
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!r[c].is_zero()) x[c].sub_mul(f, r[c]);
    }
    return x;
  }

  bool member(const Vector& x) const { return lierad::is_zero(reduce(x)); }

  /// Coordinates of a member vector in the echelon basis.
  Vector coordinates(const Vector& x) const {
    check(x.size());
    Vector out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = x[pivots_[k]];
    return out;
  }

  Vector combine(std::span<const Scalar> coords) const {
    if (coords.size() != dim()) throw DimensionError("coordinate length does not match subspace dimension");
    Vector v(ambient_);
    for (std::size_t k = 0; k < dim(); ++k) axpy(v, coords[k], basis_.row(k));
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  std::string to_string() const {
    return "span" + basis_.to_string() + " (dim " + std::to_string(dim()) + "/" + std::to_string(ambient_) + ")";
  }

  void check(std::size_t n) const {
    if (n != ambient_)
      throw DimensionError("ambient dimension mismatch: " + std::to_string(n) + " vs " + std::to_string(ambient_));
  }

private:
  static Subspace from_rref(const RrefResult& r) {
    Subspace s(r.reduced.cols());
    s.basis_ = Matrix(r.rank, r.reduced.cols());
    for (std::size_t k = 0; k < r.rank; ++k)
      for (std::size_t c = 0; c < r.reduced.cols(); ++c) s.basis_(k, c) = r.reduced(k, c);
    s.pivots_ = r.pivots;
    return s;
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel(const Matrix& a) {
  RrefResult red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < red.rank; ++k) v[red.pivots[k]] = -red.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, a.cols());
}

inline Subspace image(const Matrix& a) { return Subspace::row_space(a.transpose()); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
  u.check(v.ambient_dim());
  std::vector<Vector> rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return Subspace::span(rows, u.ambient_dim());
}

/// Zassenhaus intersection.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
  u.check(v.ambient_dim());
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  Matrix m(u.dim() + v.dim(), 2 * n);
  for (std::size_t k = 0; k < u.dim(); ++k)
    for (std::size_t c = 0; c < n; ++c) m(k, c) = m(k, n + c) = u.basis()(k, c);
  for (std::size_t k = 0; k < v.dim(); ++k)
    for (std::size_t c = 0; c < n; ++c) m(u.dim() + k, c) = v.basis()(k, c);
  RrefResult red = rref(std::move(m));
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < red.rank; ++k) {
    if (red.pivots[k] < n) continue;
    rows.emplace_back(red.reduced.row(k).begin() + static_cast<std::ptrdiff_t>(n), red.reduced.row(k).end());
  }
  return Subspace::span(rows, n);
}

/// True when v is a subspace of u.
inline bool contains(const Subspace& u, const Subspace& v) {
  u.check(v.ambient_dim());
  if (v.dim() > u.dim()) return false;
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (!u.member(v.basis_vector(k))) return false;
  return true;
}

inline bool member(const Subspace& u, const Vector& x) { return u.member(x); }

/// Image of a subspace under a linear map given as a matrix.
inline Subspace map_subspace(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionError("map_subspace: shape mismatch");
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < u.dim(); ++k) rows.push_back(m * u.basis().row(k));
  return Subspace::span(rows, m.rows());
}

/// Preimage {x : m x in u}.
inline Subspace preimage(const Matrix& m, const Subspace& u) {
  if (m.rows() != u.ambient_dim()) throw DimensionError("preimage: shape mismatch");
  // kernel of [m | -basis(u)^T], projected to the first block
  Matrix aug(m.rows(), m.cols() + u.dim());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t k = 0; k < u.dim(); ++k) aug(r, m.cols() + k) = -u.basis()(k, r);
  }
  Subspace ker = kernel(aug);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto row = ker.basis().row(k);
    rows.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m.cols()));
  }
  return Subspace::span(rows, m.cols());
}

/// Sparse semi-echelon accumulator for large, sparse linear systems.
///
/// Rows are kept with their leading entry normalised to 1 and indexed by
/// that pivot column; entries to the right of a pivot are not cleared.
class SparseEchelon {
public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Row = std::vector<Entry>;

  explicit SparseEchelon(std::size_t cols) : cols_(cols), rows_(cols), work_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

  /// Reduces v against the stored rows; returns true (and stores it) when independent.
  bool insert(const Vector& v) {
    load(v);
    return absorb();
  }
  bool insert(const Row& v) {
    for (const auto& [c, x] : v) work_[c] = x;
    return absorb();
  }

  /// Whether v already lies in the row span.
  bool in_span(const Vector& v) {
    load(v);
    eliminate();
    bool z = true;
    for (auto& x : work_)
      if (!x.is_zero()) {
        z = false;
        x = Scalar();
      }
    return z;
  }

  std::vector<Vector> rows_dense() const {
    std::vector<Vector> out;
    for (const auto& r : rows_) {
      if (r.empty()) continue;
      Vector v(cols_);
      for (const auto& [c, x] : r) v[c] = x;
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Basis of {x : row . x = 0 for every stored row}.
  std::vector<Vector> kernel() const {
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (!rows_[f].empty()) continue;
      Vector x(cols_);
      x[f] = 1;
      for (std::size_t p = cols_; p-- > 0;) {
        if (rows_[p].empty()) continue;
        Scalar s;
        for (std::size_t k = 1; k < rows_[p].size(); ++k) {
          const auto& [c, a] = rows_[p][k];
          if (!x[c].is_zero()) s.add_mul(a, x[c]);
        }
        x[p] = -s;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

private:
  void load(const Vector& v) {
    if (v.size() != cols_) throw DimensionError("SparseEchelon: row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) work_[c] = v[c];
  }

  void eliminate() {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (work_[c].is_zero() || rows_[c].empty()) continue;
      Scalar f = work_[c];
      for (const auto& [k, a] : rows_[c]) work_[k].sub_mul(f, a);
    }
  }

  bool absorb() {
    std::size_t lead = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (work_[c].is_zero()) continue;
      if (rows_[c].empty()) {
        lead = c;
        break;
      }
      Scalar f = work_[c];
      for (const auto& [k, a] : rows_[c]) work_[k].sub_mul(f, a);
    }
    if (lead == cols_) return false;
    Scalar inv = work_[lead].inverse();
    Row row;
    for (std::size_t c = lead; c < cols_; ++c) {
      if (work_[c].is_zero()) continue;
      row.emplace_back(static_cast<std::uint32_t>(c), work_[c] * inv);
      work_[c] = Scalar();
    }
    rows_[lead] = std::move(row);
    ++rank_;
    return true;
  }

  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<Row> rows_;
  Vector work_;
};

}  // namespace lierad
