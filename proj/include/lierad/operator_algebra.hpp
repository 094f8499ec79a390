#pragma once

#include "lierad/lie_ops.hpp"
#include "lierad/polynomial.hpp"

#include <functional>
#include <vector>

namespace lierad {

/// Span of operators on Q(i)^d closed under composition.
struct OperatorAlgebra {
  std::size_t space_dim = 0;
  std::vector<Matrix> generators;
  std::vector<Matrix> basis;  ///< linearly independent spanning operators

  std::size_t dim() const { return basis.size(); }

  /// The span as a subspace of the d*d operator space (row-major vectorisation).
  Subspace span() const {
    std::vector<Vector> rows;
    for (const auto& b : basis) rows.push_back(b.data());
    return Subspace::span(rows, space_dim * space_dim);
  }

  Matrix combine(std::span<const Scalar> coeffs) const {
    Matrix m(space_dim, space_dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!coeffs[k].is_zero()) m = m + coeffs[k] * basis[k];
    return m;
  }
};

/// Smallest composition-closed span containing ops (with the identity when unital).
inline OperatorAlgebra enveloping_algebra(const std::vector<Matrix>& ops, std::size_t space_dim, bool unital = false) {
  OperatorAlgebra a;
  a.space_dim = space_dim;
  a.generators = ops;
  SparseEchelon ech(space_dim * space_dim);
  std::vector<Matrix> gens;
  auto add = [&](Matrix m) {
    if (m.rows() != space_dim || m.cols() != space_dim) throw DimensionError("operator has wrong shape");
    if (m.is_zero() || !ech.insert(m.data())) return false;
    a.basis.push_back(std::move(m));
    return true;
  };
  if (unital) add(Matrix::identity(space_dim));
  for (const auto& op : ops)
    if (add(op)) gens.push_back(op);
  for (std::size_t idx = 0; idx < a.basis.size(); ++idx) {
    for (const auto& g : gens) {
      Matrix prod = g * a.basis[idx];
      add(std::move(prod));
    }
  }
  return a;
}

inline bool is_nilpotent_operator(const Matrix& m) {
  Matrix p = m;
  for (std::size_t e = 1; e < m.rows() && !p.is_zero(); e *= 2) p = p * p;
  return p.is_zero();
}

/// Basis of {a in A : trace(a b) = 0 for all b in A}, as operators.
///
/// In characteristic zero this is the Jacobson radical of A.
inline std::vector<Matrix> radical_operators(const OperatorAlgebra& a) {
  const std::size_t m = a.dim();
  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) gram(i, j) = gram(j, i) = trace_of_product(a.basis[i], a.basis[j]);
  Subspace ker = kernel(gram);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Matrix r = a.combine(ker.basis().row(k));
    if (!is_nilpotent_operator(r)) throw InternalError("trace-form radical contains a non-nilpotent operator");
    out.push_back(std::move(r));
  }
  return out;
}

inline Subspace assoc_radical(const OperatorAlgebra& a) {
  std::vector<Vector> rows;
  for (const auto& r : radical_operators(a)) rows.push_back(r.data());
  return Subspace::span(rows, a.space_dim * a.space_dim);
}

/// Basis of {T : T a = a T for every op}.
inline std::vector<Matrix> commutant(const std::vector<Matrix>& ops, std::size_t d) {
  SparseEchelon eqs(d * d);
  // (T a - a T)(r, c) = sum_k T(r,k) a(k,c) - a(r,k) T(k,c); variable T(r,k) is r*d+k
  for (const auto& a : ops) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        SparseEchelon::Row row;
        std::vector<std::pair<std::uint32_t, Scalar>> terms;
        for (std::size_t k = 0; k < d; ++k) {
          if (!a(k, c).is_zero()) terms.emplace_back(static_cast<std::uint32_t>(r * d + k), a(k, c));
          if (!a(r, k).is_zero()) terms.emplace_back(static_cast<std::uint32_t>(k * d + c), -a(r, k));
        }
        if (terms.empty()) continue;
        std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& t : terms) {
          if (!row.empty() && row.back().first == t.first)
            row.back().second += t.second;
          else
            row.push_back(std::move(t));
        }
        std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
        if (!row.empty()) eqs.insert(row);
      }
    if (eqs.rank() + 1 == d * d) break;  // only scalars remain
  }
  std::vector<Matrix> out;
  for (const auto& v : eqs.kernel()) {
    Matrix t(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) t(r, c) = v[r * d + c];
    out.push_back(std::move(t));
  }
  return out;
}

/// Decomposition of Q(i)^d into invariant subspaces of a family of operators.
struct ModuleSplit {
  std::vector<Subspace> blocks;
  /// false when some block could not be certified minimal over Q(i).
  bool complete = true;
};

namespace detail {

inline Subspace matrix_kernel_in(const Matrix& m, const Subspace& w) {
  // kernel of m restricted to w, in ambient coordinates of w
  Matrix restricted = Matrix(m.rows(), w.dim());
  for (std::size_t c = 0; c < w.dim(); ++c) {
    Vector col = m * w.basis().row(c);
    for (std::size_t r = 0; r < m.rows(); ++r) restricted(r, c) = col[r];
  }
  Subspace k = kernel(restricted);
  std::vector<Vector> rows;
  for (std::size_t t = 0; t < k.dim(); ++t) rows.push_back(w.combine(k.basis().row(t)));
  return Subspace::span(rows, w.ambient_dim());
}

inline Matrix power(const Matrix& m, std::size_t e) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t k = 0; k < e; ++k) out = out * m;
  return out;
}

// Operators of the family written in the echelon coordinates of an invariant subspace.
inline std::vector<Matrix> restrict_family(const std::vector<Matrix>& ops, const Subspace& w) {
  return restricted_action(ops, w);
}

// Splits the invariant subspace w; returns nullopt when no split is found.
inline std::optional<std::pair<Subspace, Subspace>> split_once(const std::vector<Matrix>& ops, const Subspace& w,
                                                               bool semisimple, std::size_t& commutant_dim,
                                                               std::size_t& radical_codim) {
  const std::size_t m = w.dim();
  std::vector<Matrix> local = restrict_family(ops, w);
  std::vector<Matrix> comm = commutant(local, m);
  commutant_dim = comm.size();
  radical_codim = comm.size();
  if (comm.size() <= 1) return std::nullopt;

  auto to_ambient_subspace = [&](const Subspace& local_sub) {
    std::vector<Vector> rows;
    for (std::size_t t = 0; t < local_sub.dim(); ++t) rows.push_back(w.combine(local_sub.basis().row(t)));
    return Subspace::span(rows, w.ambient_dim());
  };

  auto try_element = [&](const Matrix& x) -> std::optional<std::pair<Subspace, Subspace>> {
    poly::Poly mu = poly::minimal_polynomial(x);
    if (poly::degree(mu) <= 1) return std::nullopt;
    for (const auto& lambda : poly::gaussian_rational_roots(mu)) {
      Matrix y = x - lambda * Matrix::identity(m);
      Matrix ym = power(y, m);
      Subspace k = kernel(ym);
      Subspace im = image(ym);
      if (!k.is_zero() && !im.is_zero()) return std::make_pair(to_ambient_subspace(k), to_ambient_subspace(im));
      if (semisimple && !y.is_zero()) {
        // y nilpotent and nonzero: ker y is a proper submodule with a module complement
        Subspace k1 = kernel(y);
        // find p in the commutant with p|k1 = id and image inside k1
        std::size_t unknowns = comm.size();
        std::vector<Vector> eq_rows;
        Vector rhs;
        for (std::size_t t = 0; t < k1.dim(); ++t) {
          Vector v = k1.basis_vector(t);
          for (std::size_t r = 0; r < m; ++r) {
            Vector row(unknowns);
            for (std::size_t u = 0; u < unknowns; ++u) row[u] = dot(comm[u].row(r), v);
            eq_rows.push_back(std::move(row));
            rhs.push_back(v[r]);
          }
        }
        for (std::size_t c = 0; c < m; ++c) {
          // reduced image of e_c modulo k1 must vanish
          std::vector<Vector> images;
          for (std::size_t u = 0; u < unknowns; ++u) images.push_back(k1.reduce(comm[u].column(c)));
          for (std::size_t r = 0; r < m; ++r) {
            Vector row(unknowns);
            bool any = false;
            for (std::size_t u = 0; u < unknowns; ++u) {
              row[u] = images[u][r];
              any = any || !row[u].is_zero();
            }
            if (!any) continue;
            eq_rows.push_back(std::move(row));
            rhs.push_back(Scalar());
          }
        }
        if (auto coeffs = solve(Matrix::from_rows(eq_rows, unknowns), rhs)) {
          Matrix p(m, m);
          for (std::size_t u = 0; u < unknowns; ++u)
            if (!(*coeffs)[u].is_zero()) p = p + (*coeffs)[u] * comm[u];
          Subspace k2 = kernel(p);
          if (!k1.is_zero() && !k2.is_zero() && k1.dim() + k2.dim() == m)
            return std::make_pair(to_ambient_subspace(k1), to_ambient_subspace(k2));
        }
      }
    }
    return std::nullopt;
  };

  for (const auto& x : comm)
    if (auto s = try_element(x)) return s;
  for (std::size_t a = 0; a < comm.size(); ++a)
    for (std::size_t b = a + 1; b < comm.size(); ++b) {
      if (auto s = try_element(comm[a] + comm[b])) return s;
      if (auto s = try_element(comm[a] * comm[b])) return s;
      if (auto s = try_element(comm[a] + Scalar(2) * comm[b])) return s;
    }

  // local commutant means the block is indecomposable
  OperatorAlgebra e;
  e.space_dim = m;
  e.basis = comm;
  radical_codim = comm.size() - radical_operators(e).size();
  return std::nullopt;
}

}  // namespace detail

/// Splits Q(i)^d into invariant summands via idempotents of the commutant.
///
/// With `semisimple` set the module is known to be completely reducible and
/// blocks are irreducible; otherwise blocks are indecomposable (Fitting
/// decomposition). A block whose commutant resists splitting over Q(i) is
/// returned as is and `complete` is cleared.
inline ModuleSplit decompose_module(const std::vector<Matrix>& ops, std::size_t d, bool semisimple) {
  ModuleSplit out;
  std::vector<Subspace> todo;
  if (d > 0) todo.push_back(Subspace::whole(d));
  while (!todo.empty()) {
    Subspace w = std::move(todo.back());
    todo.pop_back();
    std::size_t comm_dim = 0, rad_codim = 0;
    auto s = detail::split_once(ops, w, semisimple, comm_dim, rad_codim);
    if (s) {
      todo.push_back(std::move(s->first));
      todo.push_back(std::move(s->second));
      continue;
    }
    bool minimal = semisimple ? comm_dim == 1 : rad_codim == 1 || comm_dim == 1;
    if (!minimal) out.complete = false;
    out.blocks.push_back(std::move(w));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivots() < b.pivots(); });
  return out;
}

// ---------------------------------------------------------------------------
// ad(L)-modules

/// Restrictions of ad over a Lie generating set, which suffices for module questions.
inline std::vector<Matrix> adjoint_action_on(const LieAlgebra& l, const Subspace& v) {
  std::vector<Matrix> ops;
  for (const auto& g : lie_generators(l)) ops.push_back(l.ad(g));
  return restricted_action(ops, v);
}

inline OperatorAlgebra module_enveloping(const LieAlgebra& l, const Subspace& v, bool unital = false) {
  return enveloping_algebra(adjoint_action_on(l, v), v.dim(), unital);
}

/// Complete reducibility of the ad(L)-module V, via the trace-form radical.
inline bool module_is_semisimple(const LieAlgebra& l, const Subspace& v) {
  v.check(l.dim());
  if (!is_ideal(l, v)) throw NotInvariant();
  if (v.is_zero()) return true;
  return radical_operators(module_enveloping(l, v)).empty();
}

/// Burnside: irreducible over C exactly when the unital enveloping algebra is all of End(V).
inline bool module_is_abs_irreducible(const LieAlgebra& l, const Subspace& v) {
  v.check(l.dim());
  if (!is_ideal(l, v)) throw NotInvariant();
  if (v.is_zero()) return false;
  return module_enveloping(l, v, true).dim() == v.dim() * v.dim();
}

}  // namespace lierad
