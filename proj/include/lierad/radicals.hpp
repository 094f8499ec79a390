#pragma once

#include "lierad/operator_algebra.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lierad {

// ---------------------------------------------------------------------------
// Series

enum class SeriesKind { derived, lower_central };

struct SeriesRecord {
  SeriesKind kind = SeriesKind::derived;
  std::vector<Subspace> terms;  ///< strictly decreasing; the last one is stable
  std::size_t stabilized_at = 0;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
  }
  const Subspace& limit() const { return terms.back(); }
};

inline SeriesRecord derived_series(const LieAlgebra& l) {
  SeriesRecord s{SeriesKind::derived, {whole(l)}, 0};
  for (;;) {
    Subspace next = bracket_spaces(l, s.terms.back(), s.terms.back());
    if (next.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(next));
  }
  s.stabilized_at = s.terms.size() - 1;
  return s;
}

inline SeriesRecord lower_central_series(const LieAlgebra& l) {
  SeriesRecord s{SeriesKind::lower_central, {whole(l)}, 0};
  Subspace all = whole(l);
  for (;;) {
    Subspace next = bracket_spaces(l, all, s.terms.back());
    if (next.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(next));
  }
  s.stabilized_at = s.terms.size() - 1;
  return s;
}

/// Least n with L_[n] = 0, or nullopt when L is not solvable.
inline std::optional<std::size_t> solvability_index(const LieAlgebra& l) {
  SeriesRecord s = derived_series(l);
  if (!s.limit().is_zero()) return std::nullopt;
  return s.stabilized_at;
}

inline std::optional<std::size_t> nilpotency_index(const LieAlgebra& l) {
  SeriesRecord s = lower_central_series(l);
  if (!s.limit().is_zero()) return std::nullopt;
  return s.stabilized_at;
}

inline bool is_solvable(const LieAlgebra& l) { return solvability_index(l).has_value(); }
inline bool is_nilpotent(const LieAlgebra& l) { return nilpotency_index(l).has_value(); }

/// i_s of an ideal (or subalgebra) viewed as an algebra.
inline std::optional<std::size_t> solvability_index(const LieAlgebra& l, const Subspace& u) {
  SeriesRecord s{SeriesKind::derived, {u}, 0};
  for (;;) {
    Subspace next = bracket_spaces(l, s.terms.back(), s.terms.back());
    if (next.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(next));
  }
  if (!s.terms.back().is_zero()) return std::nullopt;
  return s.terms.size() - 1;
}

inline bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& u) {
  Subspace cur = u;
  for (;;) {
    Subspace next = bracket_spaces(l, u, cur);
    if (next.is_zero()) return true;
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Classical radicals

/// Killing-orthogonal complement of [L,L]; certified solvable ideal with semisimple quotient.
inline Subspace solvable_radical(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Subspace derived = bracket_spaces(l, whole(l), whole(l));
  Matrix kappa = killing_form(l);
  Matrix m(derived.dim(), n);
  for (std::size_t k = 0; k < derived.dim(); ++k) {
    Vector row = kappa * derived.basis().row(k);  // kappa symmetric
    for (std::size_t c = 0; c < n; ++c) m(k, c) = row[c];
  }
  Subspace rad = kernel(m);
  if (!is_ideal(l, rad) || !solvability_index(l, rad))
    throw InternalError("solvable radical certificate failed: not a solvable ideal");
  if (!killing_nondegenerate(quotient(l, rad).algebra))
    throw InternalError("solvable radical certificate failed: quotient is not semisimple");
  return rad;
}

/// Finite-dimensional realisation of the spectral-radius style radical: it is rad.
inline Subspace vasilescu_radical(const LieAlgebra& l) { return solvable_radical(l); }

inline bool is_semisimple(const LieAlgebra& l) { return solvable_radical(l).is_zero(); }

namespace detail {

inline Vector random_member(const Subspace& u, std::mt19937& rng, int spread = 3) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  Vector c(u.dim());
  for (auto& x : c) x = Scalar(dist(rng));
  return u.combine(c);
}

}  // namespace detail

/// Nilradical: rad(L) intersected with ad^{-1} of the trace-form radical of the
/// enveloping algebra of ad(L), joined with the centre.
///
/// Certified as a nilpotent ideal; `samples` random elements of rad(L) are
/// checked for ad-nilpotency against membership.
inline Subspace nilradical(const LieAlgebra& l, std::size_t samples = 4) {
  const std::size_t n = l.dim();
  Subspace rad = solvable_radical(l);
  Subspace result = centre(l);
  if (!rad.is_zero()) {
    std::vector<Matrix> gens;
    for (const auto& g : lie_generators(l)) gens.push_back(l.ad(g));
    OperatorAlgebra env = enveloping_algebra(gens, n);
    std::vector<Matrix> rad_ads;
    for (std::size_t k = 0; k < rad.dim(); ++k) rad_ads.push_back(l.ad(rad.basis_vector(k)));
    // functionals y -> sum_k y_k trace(ad(r_k) a_t), one per basis element a_t
    Matrix f(env.dim(), rad.dim());
    for (std::size_t t = 0; t < env.dim(); ++t)
      for (std::size_t k = 0; k < rad.dim(); ++k) f(t, k) = trace_of_product(rad_ads[k], env.basis[t]);
    Subspace coeffs = kernel(f);
    std::vector<Vector> rows = result.basis_vectors();
    for (std::size_t k = 0; k < coeffs.dim(); ++k) rows.push_back(rad.combine(coeffs.basis().row(k)));
    result = Subspace::span(rows, n);
  }
  if (!is_ideal(l, result) || !is_nilpotent_subalgebra(l, result))
    throw InternalError("nilradical certificate failed: not a nilpotent ideal");
  std::mt19937 rng(0x5eed + static_cast<unsigned>(n));
  for (std::size_t s = 0; s < samples && !rad.is_zero(); ++s) {
    Vector r = detail::random_member(rad, rng);
    if (is_nilpotent_operator(l.ad(r)) != result.member(r))
      throw InternalError("nilradical certificate failed: membership disagrees with ad-nilpotency");
  }
  return result;
}

/// K_L = [L, rad L]
inline Subspace jacobson_ideal(const LieAlgebra& l) {
  Subspace k = bracket_spaces(l, whole(l), solvable_radical(l));
  if (!is_ideal(l, k) || !is_nilpotent_subalgebra(l, k))
    throw InternalError("Jacobson ideal certificate failed: not a nilpotent ideal");
  return k;
}

/// Stable term of the derived series.
inline Subspace levi_radical(const LieAlgebra& l) { return derived_series(l).limit(); }

/// Stable term of the lower central series.
inline Subspace lower_central_radical(const LieAlgebra& l) { return lower_central_series(l).limit(); }

// ---------------------------------------------------------------------------
// Preradicals and the superposition / convolution combinators

/// Ideal-valued map on Lie algebras; every value is checked to be an ideal.
struct Preradical {
  std::string name;
  std::function<Subspace(const LieAlgebra&)> eval;

  Subspace operator()(const LieAlgebra& l) const {
    Subspace s = eval(l);
    if (!is_ideal(l, s)) throw InternalError("preradical " + name + " returned a non-ideal");
    return s;
  }
};

namespace preradicals {

inline Preradical derived_step() {
  return {"D", [](const LieAlgebra& l) { return bracket_spaces(l, whole(l), whole(l)); }};
}
inline Preradical centre() {
  return {"centre", [](const LieAlgebra& l) { return lierad::centre(l); }};
}
inline Preradical rad() {
  return {"rad", [](const LieAlgebra& l) { return solvable_radical(l); }};
}
inline Preradical nilrad() {
  return {"nilrad", [](const LieAlgebra& l) { return nilradical(l); }};
}
inline Preradical jacobson() {
  return {"K", [](const LieAlgebra& l) { return jacobson_ideal(l); }};
}
inline Preradical levi() {
  return {"P", [](const LieAlgebra& l) { return levi_radical(l); }};
}
inline Preradical lower_central() {
  return {"P_C", [](const LieAlgebra& l) { return lower_central_radical(l); }};
}

}  // namespace preradicals

/// Superposition series R^0(L) = L, R^{k+1}(L) = R(R^k(L)).
struct IndexRecord {
  std::string name;
  std::vector<Subspace> stages;  ///< ideals of L, strictly decreasing
  std::size_t r = 0;             ///< least k with R^k(L) = R^{k+1}(L)

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : stages) d.push_back(s.dim());
    return d;
  }
  const Subspace& limit() const { return stages.back(); }
};

inline IndexRecord superpose_record(const Preradical& r, const LieAlgebra& l) {
  IndexRecord rec{r.name, {whole(l)}, 0};
  for (;;) {
    const Subspace& cur = rec.stages.back();
    Restriction res = induced_algebra(l, cur);
    Subspace next = res.push(r(res.algebra));
    if (!contains(cur, next)) throw InternalError("superposition stage of " + r.name + " is not decreasing");
    if (next == cur) break;
    rec.stages.push_back(std::move(next));
  }
  rec.r = rec.stages.size() - 1;
  for (const auto& s : rec.stages)
    if (!is_ideal(l, s)) throw InternalError("superposition stage of " + r.name + " is not an ideal");
  return rec;
}

inline Preradical superpose(const Preradical& r) {
  return {"superpose(" + r.name + ")", [r](const LieAlgebra& l) { return superpose_record(r, l).limit(); }};
}

/// (R * T)(L) = q^{-1}(R(L / T(L))), with T(L) contained in the result.
inline Subspace convolve_at(const Preradical& r, const Subspace& t_value, const LieAlgebra& l,
                            const std::string& label) {
  Quotient q = quotient(l, t_value);
  Subspace out = q.preimage(r(q.algebra));
  if (!contains(out, t_value)) throw InternalError("convolution " + label + " is not above its right factor");
  return out;
}

inline Preradical convolve(const Preradical& r, const Preradical& t) {
  std::string label = r.name + "*" + t.name;
  return {label, [r, t, label](const LieAlgebra& l) { return convolve_at(r, t(l), l, label); }};
}

/// Increasing chain R^(0) = 0, R^(k+1) = (R * R^(k))(L) until it stabilises.
inline IndexRecord star_record(const Preradical& r, const LieAlgebra& l) {
  IndexRecord rec{"star(" + r.name + ")", {zero(l)}, 0};
  for (;;) {
    Subspace next = convolve_at(r, rec.stages.back(), l, rec.name);
    if (next == rec.stages.back()) break;
    rec.stages.push_back(std::move(next));
  }
  rec.r = rec.stages.size() - 1;
  return rec;
}

inline Preradical star(const Preradical& r) {
  return {"star(" + r.name + ")", [r](const LieAlgebra& l) { return star_record(r, l).limit(); }};
}

/// r_J = i_s(K_L) + 1, cross-checked against the literal superposition count.
inline std::size_t jacobson_index(const LieAlgebra& l) {
  IndexRecord rec = superpose_record(preradicals::jacobson(), l);
  if (l.dim() == 0) return rec.r;
  auto is = solvability_index(l, rec.stages.at(1));
  if (!is) throw InternalError("Jacobson ideal is not solvable");
  if (*is + 1 != rec.r) throw InternalError("Jacobson index shortcut disagrees with superposition count");
  return rec.r;
}

}  // namespace lierad
