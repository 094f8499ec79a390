#pragma once

#include "lierad/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierad {

// ---------------------------------------------------------------------------
// Subspace calculus inside a fixed algebra

inline Subspace bracket_spaces(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  u.check(l.dim());
  v.check(l.dim());
  std::vector<Vector> rows;
  if (u.is_whole() && v.is_whole()) {
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i + 1; j < l.dim(); ++j)
        if (!is_zero(l.structure(i, j))) rows.push_back(l.structure(i, j));
  } else {
    auto ub = u.basis_vectors();
    auto vb = v.basis_vectors();
    for (const auto& x : ub)
      for (const auto& y : vb) {
        Vector z = l.bracket(x, y);
        if (!is_zero(z)) rows.push_back(std::move(z));
      }
  }
  return Subspace::span(rows, l.dim());
}

inline Subspace whole(const LieAlgebra& l) { return Subspace::whole(l.dim()); }
inline Subspace zero(const LieAlgebra& l) { return Subspace::zero(l.dim()); }

inline bool is_subalgebra(const LieAlgebra& l, const Subspace& u) {
  return contains(u, bracket_spaces(l, u, u));
}

inline bool is_ideal(const LieAlgebra& l, const Subspace& u) {
  u.check(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t k = 0; k < u.dim(); ++k)
      if (!u.member(l.ad_basis(i) * u.basis().row(k))) return false;
  return true;
}

/// Basis of the derivation algebra {D : D[a,b] = [Da,b] + [a,Db]}.
///
/// Unknown D(r, c) is variable r * dim + c.
inline std::vector<Matrix> derivation_basis(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  SparseEchelon eqs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        const Vector& cij = l.structure(i, j);
        for (std::size_t m = 0; m < n; ++m) {
          if (!cij[m].is_zero()) row[k * n + m] += cij[m];
          const Scalar& a = l.structure(m, j)[k];
          if (!a.is_zero()) row[m * n + i] -= a;
          const Scalar& b = l.structure(i, m)[k];
          if (!b.is_zero()) row[m * n + j] -= b;
        }
        if (!is_zero(row)) eqs.insert(row);
      }
  std::vector<Matrix> out;
  for (const auto& v : eqs.kernel()) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.push_back(std::move(d));
  }
  return out;
}

inline bool is_derivation(const LieAlgebra& l, const Matrix& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * l.structure(i, j);
      Vector rhs = l.bracket(d.column(i), unit_vector(n, j)) + l.bracket(unit_vector(n, i), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

inline bool invariant_under(const Subspace& u, const Matrix& op) {
  for (std::size_t k = 0; k < u.dim(); ++k)
    if (!u.member(op * u.basis().row(k))) return false;
  return true;
}

/// Invariance under every derivation (not only inner ones).
inline bool is_characteristic(const LieAlgebra& l, const Subspace& u) {
  if (!is_ideal(l, u)) return false;
  for (const auto& d : derivation_basis(l))
    if (!invariant_under(u, d)) return false;
  return true;
}

inline Subspace generated_subalgebra(const LieAlgebra& l, const std::vector<Vector>& gens) {
  Subspace w = Subspace::span(gens, l.dim());
  for (;;) {
    Subspace next = sum(w, bracket_spaces(l, w, w));
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

inline Subspace generated_ideal(const LieAlgebra& l, const std::vector<Vector>& gens) {
  Subspace w = Subspace::span(gens, l.dim());
  Subspace all = whole(l);
  for (;;) {
    Subspace next = sum(w, bracket_spaces(l, all, w));
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

/// {a : [a, u] = 0 for all u in U}
inline Subspace centralizer(const LieAlgebra& l, const Subspace& u) {
  const std::size_t n = l.dim();
  u.check(n);
  // rows indexed by (basis vector of U, output coordinate); columns by coordinate of a
  Matrix m(u.dim() * n, n);
  for (std::size_t t = 0; t < u.dim(); ++t) {
    Vector ut = u.basis_vector(t);
    for (std::size_t i = 0; i < n; ++i) {
      Vector col = l.ad_basis(i) * ut;
      for (std::size_t k = 0; k < n; ++k) m(t * n + k, i) = col[k];
    }
  }
  return kernel(m);
}

inline Subspace centre(const LieAlgebra& l) { return centralizer(l, whole(l)); }

/// Lie algebra of derivations restricted: checks phi([a,b]) against commutators.
inline bool is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& map) {
  if (map.rows() != dst.dim() || map.cols() != src.dim()) return false;
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j)
      if (map * src.structure(i, j) != dst.bracket(map.column(i), map.column(j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Quotients, restrictions, products

struct Quotient {
  LieAlgebra algebra;
  Subspace ideal;
  Matrix projection;  ///< dim(L/I) x dim(L)
  Matrix section;     ///< dim(L) x dim(L/I), picks the free coordinates
  std::vector<std::size_t> representatives;

  /// Full preimage of a subspace of the quotient.
  Subspace preimage(const Subspace& w) const {
    std::vector<Vector> rows = ideal.basis_vectors();
    for (std::size_t k = 0; k < w.dim(); ++k) rows.push_back(section * w.basis().row(k));
    return Subspace::span(rows, ideal.ambient_dim());
  }
  Subspace image(const Subspace& u) const { return map_subspace(projection, u); }
};

/// L / I on the basis of free (non-pivot) coordinates of I.
inline Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
  ideal.check(l.dim());
  if (!is_ideal(l, ideal)) throw NotAnIdeal();
  const std::size_t n = l.dim();
  std::vector<std::size_t> reps = ideal.free_coordinates();
  const std::size_t m = reps.size();
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out(m);
    for (std::size_t a = 0; a < m; ++a) out[a] = r[reps[a]];
    return out;
  };
  Matrix proj(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector col = project(unit_vector(n, c));
    for (std::size_t a = 0; a < m; ++a) proj(a, c) = col[a];
  }
  Matrix sec(n, m);
  for (std::size_t a = 0; a < m; ++a) sec(reps[a], a) = 1;
  std::vector<Vector> table(m * m, Vector(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(l.label(reps[a]));
    for (std::size_t b = 0; b < m; ++b)
      if (a != b) table[a * m + b] = project(l.structure(reps[a], reps[b]));
  }
  LieAlgebra q(l.name() + "/I", std::move(labels), std::move(table));
  if (!is_homomorphism(l, q, proj)) throw InternalError("quotient projection is not a homomorphism");
  return {std::move(q), ideal, std::move(proj), std::move(sec), std::move(reps)};
}

struct Restriction {
  LieAlgebra algebra;
  Subspace space;
  Matrix inclusion;  ///< dim(L) x dim(U)

  Subspace push(const Subspace& w) const { return map_subspace(inclusion, w); }
  /// U-coordinates of a subspace of L contained in U.
  Subspace pull(const Subspace& w) const {
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < w.dim(); ++k) {
      Vector v = w.basis_vector(k);
      if (!space.member(v)) throw DimensionError("pull: subspace not contained in the restriction");
      rows.push_back(space.coordinates(v));
    }
    return Subspace::span(rows, space.dim());
  }
};

/// U viewed as a Lie algebra on its echelon basis.
inline Restriction induced_algebra(const LieAlgebra& l, const Subspace& u) {
  u.check(l.dim());
  if (!is_subalgebra(l, u)) throw NotASubalgebra();
  const std::size_t d = u.dim();
  auto basis = u.basis_vectors();
  std::vector<Vector> table(d * d, Vector(d));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) {
    labels.push_back(l.label(u.pivots()[a]));
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector c = u.coordinates(l.bracket(basis[a], basis[b]));
      table[b * d + a] = Scalar(-1) * c;
      table[a * d + b] = std::move(c);
    }
  }
  LieAlgebra sub(l.name() + "|U", std::move(labels), std::move(table));
  Matrix inc = Matrix::from_columns(basis, l.dim());
  if (d > 0 && !is_homomorphism(sub, l, inc)) throw InternalError("inclusion is not a homomorphism");
  return {std::move(sub), u, std::move(inc)};
}

/// Coordinate block of the k-th factor inside a direct product.
inline Subspace factor_block(const std::vector<std::size_t>& dims, std::size_t k) {
  std::size_t total = 0, offset = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (t < k) offset += dims[t];
    total += dims[t];
  }
  std::vector<Vector> rows;
  for (std::size_t c = 0; c < dims.at(k); ++c) rows.push_back(unit_vector(total, offset + c));
  return Subspace::span(rows, total);
}

inline LieAlgebra direct_product(const std::vector<LieAlgebra>& factors, std::string name = {}) {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.dim();
  std::vector<Vector> table(n * n, Vector(n));
  std::vector<std::string> labels;
  std::string joined;
  std::size_t off = 0;
  for (const auto& f : factors) {
    joined += (joined.empty() ? "" : " + ") + f.name();
    for (std::size_t i = 0; i < f.dim(); ++i) {
      labels.push_back(f.label(i));
      for (std::size_t j = 0; j < f.dim(); ++j)
        for (std::size_t k = 0; k < f.dim(); ++k) table[(off + i) * n + off + j][off + k] = f.structure(i, j)[k];
    }
    off += f.dim();
  }
  return LieAlgebra(name.empty() ? joined : std::move(name), std::move(labels), std::move(table));
}

/// Semidirect product L1 (+) L0 with [(a;x),(b;y)] = ([a,b]; phi(a)y - phi(b)x + [x,y]).
///
/// phi[i] is the action of the i-th basis vector of L1 on L0. Basis order:
/// L1 first, then L0.
inline LieAlgebra semidirect_product(const LieAlgebra& l1, const LieAlgebra& l0, const std::vector<Matrix>& phi,
                                     std::string name = {}) {
  const std::size_t n1 = l1.dim(), n0 = l0.dim(), n = n1 + n0;
  if (phi.size() != n1) throw DimensionError("semidirect_product: need one operator per basis vector of L1");
  for (std::size_t i = 0; i < n1; ++i) {
    if (phi[i].rows() != n0 || phi[i].cols() != n0) throw DimensionError("semidirect_product: operator shape");
    if (!is_derivation(l0, phi[i])) throw NotADerivation(i);
  }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) {
      Matrix lhs(n0, n0);
      const Vector& c = l1.structure(i, j);
      for (std::size_t k = 0; k < n1; ++k)
        if (!c[k].is_zero()) lhs = lhs + c[k] * phi[k];
      Matrix residual = lhs - (phi[i] * phi[j] - phi[j] * phi[i]);
      if (!residual.is_zero()) throw NotAHomomorphism(i, j, std::move(residual));
    }
  std::vector<Vector> table(n * n, Vector(n));
  std::vector<std::string> labels = l1.labels();
  for (const auto& s : l0.labels()) labels.push_back(s);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) table[i * n + j][k] = l1.structure(i, j)[k];
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) {
        table[i * n + n1 + j][n1 + k] = phi[i](k, j);
        table[(n1 + j) * n + i][n1 + k] = -phi[i](k, j);
      }
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) table[(n1 + i) * n + n1 + j][n1 + k] = l0.structure(i, j)[k];
  LieAlgebra out(name.empty() ? l1.name() + " x| " + l0.name() : std::move(name), std::move(labels),
                 std::move(table));
  std::vector<Vector> l0_rows;
  for (std::size_t k = 0; k < n0; ++k) l0_rows.push_back(unit_vector(n, n1 + k));
  Quotient q = quotient(out, Subspace::span(l0_rows, n));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      if (q.algebra.structure(i, j) != l1.structure(i, j))
        throw InternalError("semidirect product: quotient by L0 differs from L1");
  return out;
}

/// kappa(i, j) = trace(ad b_i ad b_j)
inline Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) k(i, j) = k(j, i) = trace_of_product(l.ad_basis(i), l.ad_basis(j));
  return k;
}

inline bool killing_nondegenerate(const LieAlgebra& l) { return rank(killing_form(l)) == l.dim(); }

/// Greedy generating set: basis vectors not already in the subalgebra of the previous ones.
inline std::vector<Vector> lie_generators(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> gens, reached;
  SparseEchelon ech(n);
  for (std::size_t i = 0; i < n && ech.rank() < n; ++i) {
    Vector b = unit_vector(n, i);
    if (!ech.insert(b)) continue;
    gens.push_back(b);
    reached.push_back(std::move(b));
    for (std::size_t a = reached.size() - 1; a < reached.size(); ++a)
      for (std::size_t c = 0; c < a; ++c) {
        Vector x = l.bracket(reached[c], reached[a]);
        if (ech.insert(x)) reached.push_back(std::move(x));
      }
  }
  return gens;
}

/// Lie algebra spanned by linearly independent square matrices closed under commutators.
inline LieAlgebra matrix_lie_algebra(std::string name, std::vector<std::string> labels,
                                     const std::vector<Matrix>& mats) {
  const std::size_t d = mats.size();
  if (labels.empty())
    for (std::size_t k = 0; k < d; ++k) labels.push_back("m" + std::to_string(k + 1));
  std::vector<Vector> cols;
  for (const auto& m : mats) cols.push_back(m.data());
  const std::size_t len = d ? cols.front().size() : 0;
  Matrix basis = Matrix::from_columns(cols, len);
  if (rank(basis) != d) throw AlgebraError("matrix_lie_algebra: matrices are linearly dependent");
  std::vector<Vector> table(d * d, Vector(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Matrix c = mats[a] * mats[b] - mats[b] * mats[a];
      auto x = solve(basis, c.data());
      if (!x) throw AlgebraError("matrix_lie_algebra: span is not closed under commutators");
      table[b * d + a] = Scalar(-1) * *x;
      table[a * d + b] = std::move(*x);
    }
  return LieAlgebra(std::move(name), std::move(labels), std::move(table));
}

/// Operators ad(b_i) restricted to an ad-invariant subspace, in its echelon coordinates.
inline std::vector<Matrix> restricted_action(const std::vector<Matrix>& ops, const Subspace& v) {
  std::vector<Matrix> out;
  for (const auto& op : ops) {
    Matrix r(v.dim(), v.dim());
    for (std::size_t c = 0; c < v.dim(); ++c) {
      Vector img = op * v.basis().row(c);
      if (!v.member(img)) throw NotInvariant();
      Vector coords = v.coordinates(img);
      for (std::size_t k = 0; k < v.dim(); ++k) r(k, c) = coords[k];
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Matrix> adjoint_operators(const LieAlgebra& l) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < l.dim(); ++i) ops.push_back(l.ad_basis(i));
  return ops;
}

}  // namespace lierad
