#pragma once

#include "lierad/radicals.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lierad {

// ---------------------------------------------------------------------------
// Levi decomposition

struct LeviWitness {
  Subspace levi;
  Subspace radical;
};

/// Checks the Levi witness invariants; returns the first violated one, if any.
inline std::optional<std::string> check_levi_witness(const LieAlgebra& l, const LeviWitness& w) {
  if (!is_subalgebra(l, w.levi)) return "levi factor is not a subalgebra";
  if (!intersect(w.levi, w.radical).is_zero()) return "levi factor meets the radical";
  if (!sum(w.levi, w.radical).is_whole()) return "levi factor and radical do not span L";
  if (!w.levi.is_zero() && !killing_nondegenerate(induced_algebra(l, w.levi).algebra))
    return "levi factor is not semisimple";
  return std::nullopt;
}

/// Lifts the free-coordinate complement of rad(L) to a subalgebra, correcting
/// bracket defects level by level along the derived series of rad(L).
inline LeviWitness levi_decomposition(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Subspace rad = solvable_radical(l);
  std::vector<std::size_t> reps = rad.free_coordinates();
  const std::size_t m = reps.size();
  std::vector<Vector> y;
  for (auto r : reps) y.push_back(unit_vector(n, r));
  // structure constants of L/rad on the representatives
  std::vector<Vector> c(m * m, Vector(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector red = rad.reduce(l.structure(reps[a], reps[b]));
      for (std::size_t k = 0; k < m; ++k) c[a * m + b][k] = red[reps[k]];
    }
  auto defect = [&](std::size_t a, std::size_t b) {
    Vector d = l.bracket(y[a], y[b]);
    for (std::size_t k = 0; k < m; ++k)
      if (!c[a * m + b][k].is_zero()) axpy(d, -c[a * m + b][k], y[k]);
    return d;
  };

  SeriesRecord series{SeriesKind::derived, {rad}, 0};
  while (!series.terms.back().is_zero()) series.terms.push_back(bracket_spaces(l, series.terms.back(), series.terms.back()));

  for (std::size_t level = 0; level + 1 < series.terms.size() && m > 0; ++level) {
    const Subspace& cur = series.terms[level];
    const Subspace& next = series.terms[level + 1];
    auto w = cur.basis_vectors();
    const std::size_t dk = w.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    if (pairs.empty()) break;
    Matrix sys(pairs.size() * n, m * dk);
    Vector rhs(pairs.size() * n);
    // ad(y_a) w_l, reduced modulo the next term
    std::vector<Vector> yw(m * dk);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < dk; ++t) yw[a * dk + t] = l.bracket(y[a], w[t]);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [a, b] = pairs[p];
      Vector d = next.reduce(defect(a, b));
      for (std::size_t r = 0; r < n; ++r) rhs[p * n + r] = -d[r];
      for (std::size_t t = 0; t < dk; ++t) {
        Vector col_b = next.reduce(yw[a * dk + t]);             // unknown a_b
        Vector col_a = next.reduce(Scalar(-1) * yw[b * dk + t]);  // unknown a_a
        for (std::size_t r = 0; r < n; ++r) {
          sys(p * n + r, b * dk + t) += col_b[r];
          sys(p * n + r, a * dk + t) += col_a[r];
        }
        for (std::size_t k = 0; k < m; ++k) {
          if (c[a * m + b][k].is_zero()) continue;
          Vector wr = next.reduce(w[t]);
          for (std::size_t r = 0; r < n; ++r)
            if (!wr[r].is_zero()) sys(p * n + r, k * dk + t).sub_mul(c[a * m + b][k], wr[r]);
        }
      }
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw InternalError("Levi lifting: correction system is inconsistent");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < dk; ++t)
        if (!(*sol)[a * dk + t].is_zero()) axpy(y[a], (*sol)[a * dk + t], w[t]);
  }
  LeviWitness out{Subspace::span(y, n), rad};
  if (out.levi.dim() != m) throw InternalError("Levi lifting lost dimension");
  if (auto bad = check_levi_witness(l, out)) throw InternalError("Levi witness: " + *bad);
  return out;
}

/// [M, M] for M the centraliser of rad(L).
inline Subspace largest_semisimple_ideal(const LieAlgebra& l) {
  Subspace rad = solvable_radical(l);
  Subspace m = centralizer(l, rad);
  Subspace s = bracket_spaces(l, m, m);
  if (!is_ideal(l, s)) throw InternalError("largest semisimple ideal certificate: not an ideal");
  if (!intersect(s, rad).is_zero()) throw InternalError("largest semisimple ideal certificate: meets rad");
  if (!s.is_zero() && !killing_nondegenerate(induced_algebra(l, s).algebra))
    throw InternalError("largest semisimple ideal certificate: not semisimple");
  return s;
}

// ---------------------------------------------------------------------------
// Decompositions into ideals

struct IdealSplit {
  std::vector<Subspace> parts;
  bool partial = false;  ///< some part may still decompose over C
};

namespace detail {

inline std::vector<Matrix> generator_ads(const LieAlgebra& l) {
  std::vector<Matrix> ops;
  for (const auto& g : lie_generators(l)) ops.push_back(l.ad(g));
  return ops;
}

inline void check_ideal_split(const LieAlgebra& l, const IdealSplit& s) {
  std::size_t total = 0;
  Subspace acc = zero(l);
  for (const auto& p : s.parts) {
    if (!is_ideal(l, p)) throw InternalError("ideal decomposition: part is not an ideal");
    total += p.dim();
    acc = sum(acc, p);
  }
  if (acc.dim() != total || !acc.is_whole()) throw InternalError("ideal decomposition: parts do not form a direct sum");
  for (std::size_t a = 0; a < s.parts.size(); ++a)
    for (std::size_t b = a + 1; b < s.parts.size(); ++b)
      if (!bracket_spaces(l, s.parts[a], s.parts[b]).is_zero())
        throw InternalError("ideal decomposition: parts do not commute");
}

}  // namespace detail

/// Simple ideals of a semisimple algebra, from idempotents of its centroid.
inline IdealSplit simple_components(const LieAlgebra& l) {
  if (!killing_nondegenerate(l)) throw NotSemisimple();
  ModuleSplit ms = decompose_module(detail::generator_ads(l), l.dim(), true);
  IdealSplit out{ms.blocks, !ms.complete};
  detail::check_ideal_split(l, out);
  return out;
}

/// Indecomposable ideal summands, from the Fitting decomposition of centroid elements.
inline IdealSplit direct_summands(const LieAlgebra& l) {
  ModuleSplit ms = decompose_module(detail::generator_ads(l), l.dim(), false);
  IdealSplit out{ms.blocks, !ms.complete};
  detail::check_ideal_split(l, out);
  return out;
}

// ---------------------------------------------------------------------------
// Frattini-free and Jacobson-free verdicts

struct WeightBlock {
  Subspace space;
  std::vector<Scalar> weights;  ///< scalar by which each basis vector of C acts
};

struct FrattiniFreeWitness {
  Subspace c;
  Subspace s;
  Subspace j;
  std::vector<WeightBlock> blocks;
};

struct ViolatedCondition {
  int id = 0;  ///< 1: nilradical abelian, 2: nilradical semisimple module, 3: centre meets [L,L]
  std::string description;
  Subspace offending;
};

struct FrattiniVerdict {
  bool yes = false;
  std::vector<ViolatedCondition> violations;
  std::optional<FrattiniFreeWitness> witness;
};

/// Returns every violated witness invariant (empty when the witness is sound).
inline std::vector<std::string> check_frattini_witness(const LieAlgebra& l, const FrattiniFreeWitness& w) {
  std::vector<std::string> bad;
  const Subspace& c = w.c;
  const Subspace& s = w.s;
  const Subspace& j = w.j;
  if (c.dim() + s.dim() + j.dim() != l.dim() || !sum(sum(c, s), j).is_whole())
    bad.push_back("L is not the direct space sum C + S + J");
  if (!is_ideal(l, j)) bad.push_back("J is not an ideal");
  if (!bracket_spaces(l, j, j).is_zero()) bad.push_back("J is not commutative");
  if (!bracket_spaces(l, c, c).is_zero()) bad.push_back("C is not a commutative subalgebra");
  if (!is_subalgebra(l, s)) bad.push_back("S is not a subalgebra");
  else if (!s.is_zero() && !killing_nondegenerate(induced_algebra(l, s).algebra)) bad.push_back("S is not semisimple");
  if (!bracket_spaces(l, c, s).is_zero()) bad.push_back("[C, S] is not zero");
  Subspace acc = zero(l);
  std::size_t total = 0;
  for (const auto& b : w.blocks) {
    total += b.space.dim();
    acc = sum(acc, b.space);
    if (!contains(j, b.space) || !is_ideal(l, b.space)) {
      bad.push_back("block is not an invariant subspace of J");
      continue;
    }
    if (!module_is_abs_irreducible(l, b.space)) bad.push_back("block is not irreducible");
    if (b.weights.size() != c.dim()) {
      bad.push_back("block weight data has wrong length");
      continue;
    }
    for (std::size_t k = 0; k < c.dim(); ++k) {
      Matrix act = l.ad(c.basis_vector(k));
      for (std::size_t t = 0; t < b.space.dim(); ++t) {
        Vector x = b.space.basis_vector(t);
        if (act * x != b.weights[k] * x) {
          bad.push_back("C does not act by the recorded scalar on a block");
          t = b.space.dim();
          k = c.dim();
        }
      }
    }
  }
  if (acc.dim() != total || acc != j) bad.push_back("blocks do not decompose J");
  return bad;
}

namespace detail {

inline FrattiniFreeWitness build_frattini_witness(const LieAlgebra& l, const Subspace& nil) {
  const std::size_t n = l.dim();
  LeviWitness levi = levi_decomposition(l);
  const Subspace& rad = levi.radical;
  std::vector<Vector> reduced;
  for (std::size_t k = 0; k < rad.dim(); ++k) reduced.push_back(nil.reduce(rad.basis_vector(k)));
  Subspace comp = Subspace::span(reduced, n);
  auto cs = comp.basis_vectors();
  auto ss = levi.levi.basis_vectors();
  auto ns = nil.basis_vectors();
  const std::size_t m = cs.size(), dn = ns.size();

  // unknown n_i = sum_t u(i,t) nu_t; variable index i*dn + t
  std::vector<Vector> rows;
  Vector rhs;
  auto add_equations = [&](const std::vector<std::pair<std::size_t, Vector>>& terms, const Vector& target) {
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(m * dn);
      bool any = !target[r].is_zero();
      for (const auto& [var, vec] : terms) {
        row[var] += vec[r];
        any = any || !vec[r].is_zero();
      }
      if (!any) continue;
      rows.push_back(std::move(row));
      rhs.push_back(target[r]);
    }
  };
  // [s, c_i - n_i] = 0
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& s : ss) {
      std::vector<std::pair<std::size_t, Vector>> terms;
      for (std::size_t t = 0; t < dn; ++t) terms.emplace_back(i * dn + t, l.bracket(s, ns[t]));
      add_equations(terms, l.bracket(s, cs[i]));
    }
  // [c_i - n_i, c_j - n_j] = 0 with [n_i, n_j] = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::pair<std::size_t, Vector>> terms;
      for (std::size_t t = 0; t < dn; ++t) {
        terms.emplace_back(j * dn + t, l.bracket(cs[i], ns[t]));
        terms.emplace_back(i * dn + t, l.bracket(ns[t], cs[j]));
      }
      add_equations(terms, l.bracket(cs[i], cs[j]));
    }
  std::vector<Vector> corrected = cs;
  if (!rows.empty()) {
    auto sol = solve(Matrix::from_rows(rows, m * dn), rhs);
    if (!sol) throw WitnessConstructionFailed("no commuting lift of rad/nilradical centralising the Levi factor");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < dn; ++t)
        if (!(*sol)[i * dn + t].is_zero()) axpy(corrected[i], -(*sol)[i * dn + t], ns[t]);
  }
  FrattiniFreeWitness w{Subspace::span(corrected, n), levi.levi, nil, {}};

  if (!nil.is_zero()) {
    ModuleSplit split = decompose_module(adjoint_action_on(l, nil), nil.dim(), true);
    if (!split.complete) throw WitnessConstructionFailed("nilradical does not split into irreducibles over Q(i)");
    for (const auto& b : split.blocks) {
      std::vector<Vector> rows_b;
      for (std::size_t t = 0; t < b.dim(); ++t) rows_b.push_back(nil.combine(b.basis().row(t)));
      WeightBlock wb{Subspace::span(rows_b, n), {}};
      Vector x0 = wb.space.basis_vector(0);
      std::size_t piv = wb.space.pivots()[0];
      for (std::size_t k = 0; k < w.c.dim(); ++k) wb.weights.push_back(l.bracket(w.c.basis_vector(k), x0)[piv]);
      w.blocks.push_back(std::move(wb));
    }
  }
  auto bad = check_frattini_witness(l, w);
  if (!bad.empty()) throw WitnessConstructionFailed(bad.front());
  return w;
}

}  // namespace detail

/// Decides Frattini-freeness by three necessary conditions, then demands a
/// verified C + S + J witness before answering yes.
inline FrattiniVerdict frattini_free(const LieAlgebra& l) {
  FrattiniVerdict v;
  Subspace nil = nilradical(l);
  Subspace nn = bracket_spaces(l, nil, nil);
  if (!nn.is_zero()) v.violations.push_back({1, "nilradical is not commutative", nn});
  if (!nil.is_zero()) {
    OperatorAlgebra env = module_enveloping(l, nil);
    std::vector<Vector> moved;
    for (const auto& r : radical_operators(env))
      for (std::size_t c = 0; c < nil.dim(); ++c) moved.push_back(nil.combine(r.column(c)));
    Subspace radv = Subspace::span(moved, l.dim());
    if (!radv.is_zero()) v.violations.push_back({2, "nilradical is not a semisimple L-module", radv});
  }
  Subspace zc = intersect(centre(l), bracket_spaces(l, whole(l), whole(l)));
  if (!zc.is_zero()) v.violations.push_back({3, "centre meets [L,L]", zc});
  if (!v.violations.empty()) return v;
  v.witness = detail::build_frattini_witness(l, nil);
  v.yes = true;
  return v;
}

struct JacobsonVerdict {
  bool yes = false;
  Subspace jacobson;
  Subspace semisimple_part;  ///< when yes
  Subspace central_part;     ///< when yes: rad(L) = Z(L)
};

inline JacobsonVerdict jacobson_free(const LieAlgebra& l) {
  JacobsonVerdict v;
  v.jacobson = jacobson_ideal(l);
  v.yes = v.jacobson.is_zero();
  if (v.yes) {
    v.semisimple_part = largest_semisimple_ideal(l);
    v.central_part = solvable_radical(l);
    if (v.central_part != centre(l)) throw InternalError("Jacobson-free decomposition: rad differs from the centre");
    if (!sum(v.semisimple_part, v.central_part).is_whole() ||
        v.semisimple_part.dim() + v.central_part.dim() != l.dim())
      throw InternalError("Jacobson-free decomposition: parts do not span L");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Subsimple classification

enum class SubsimpleClass { dim1, simple, classI, classII, not_subsimple };

inline const char* to_string(SubsimpleClass c) {
  switch (c) {
    case SubsimpleClass::dim1: return "dim1";
    case SubsimpleClass::simple: return "simple";
    case SubsimpleClass::classI: return "classI";
    case SubsimpleClass::classII: return "classII";
    case SubsimpleClass::not_subsimple: return "not_subsimple";
  }
  return "?";
}

struct SubsimpleVerdict {
  SubsimpleClass cls = SubsimpleClass::not_subsimple;
  bool heuristic_isomorphism = false;  ///< classI relies on the rank proxy
  std::string reason;
  std::vector<Subspace> parts;  ///< simple components, or the module X for classII

  bool yes() const { return cls != SubsimpleClass::not_subsimple; }
};

namespace detail {

/// Minimum centraliser dimension over sampled elements: a rank proxy for a simple ideal.
inline std::size_t rank_proxy(const LieAlgebra& l, const Subspace& ideal, std::size_t samples = 3) {
  Restriction r = induced_algebra(l, ideal);
  std::mt19937 rng(0xc0ffee);
  std::size_t best = r.algebra.dim();
  for (std::size_t k = 0; k < samples; ++k) {
    Vector x = random_member(Subspace::whole(r.algebra.dim()), rng);
    best = std::min(best, centralizer(r.algebra, Subspace::span({x}, r.algebra.dim())).dim());
  }
  return best;
}

}  // namespace detail

inline SubsimpleVerdict subsimple(const LieAlgebra& l) {
  SubsimpleVerdict v;
  if (l.dim() == 0) {
    v.reason = "zero algebra";
    return v;
  }
  if (l.dim() == 1) {
    v.cls = SubsimpleClass::dim1;
    v.reason = "one-dimensional";
    return v;
  }
  if (killing_nondegenerate(l)) {
    IdealSplit comps = simple_components(l);
    v.parts = comps.parts;
    if (comps.parts.size() == 1 && !comps.partial) {
      v.cls = SubsimpleClass::simple;
      v.reason = "simple";
    } else if (comps.parts.size() == 2 && !comps.partial) {
      const auto& a = comps.parts[0];
      const auto& b = comps.parts[1];
      if (a.dim() == b.dim() && detail::rank_proxy(l, a) == detail::rank_proxy(l, b)) {
        v.cls = SubsimpleClass::classI;
        v.heuristic_isomorphism = a.dim() >= 78;
        v.reason = "sum of two simple ideals of equal dimension and rank";
      } else {
        v.reason = "two non-isomorphic simple ideals";
      }
    } else {
      v.reason = "semisimple with " + std::to_string(comps.parts.size()) + " components";
    }
    return v;
  }
  Subspace x = nilradical(l);
  if (!bracket_spaces(l, x, x).is_zero()) {
    v.reason = "nilradical is not commutative";
  } else if (centralizer(l, x) != x) {
    v.reason = "nilradical is not self-centralising";
  } else if (!module_is_abs_irreducible(l, x)) {
    v.reason = "nilradical is not an irreducible module";
  } else {
    v.cls = SubsimpleClass::classII;
    v.reason = "irreducible operator algebra acting on its nilradical";
    v.parts = {x};
  }
  return v;
}

// ---------------------------------------------------------------------------
// Subdirect products, submaximal families, operator representations

/// True when every factor projection maps m onto its factor.
inline bool is_subdirect_product(const Subspace& m, const std::vector<std::size_t>& factor_dims) {
  std::size_t total = 0;
  for (auto d : factor_dims) total += d;
  m.check(total);
  std::size_t off = 0;
  for (auto d : factor_dims) {
    Matrix proj(d, total);
    for (std::size_t k = 0; k < d; ++k) proj(k, off + k) = 1;
    if (map_subspace(proj, m).dim() != d) return false;
    off += d;
  }
  return true;
}

/// Ideals J_k with subsimple quotients L/J_k and zero intersection.
inline std::vector<Subspace> submaximal_witness_family(const LieAlgebra& l) {
  FrattiniVerdict v = frattini_free(l);
  if (!v.yes) throw NotFrattiniFree();
  const FrattiniFreeWitness& w = *v.witness;
  std::vector<Subspace> family;
  if (!w.s.is_zero()) {
    Restriction sres = induced_algebra(l, w.s);
    IdealSplit comps = simple_components(sres.algebra);
    if (comps.partial) throw InternalError("submaximal family: Levi factor does not split over Q(i)");
    for (std::size_t a = 0; a < comps.parts.size(); ++a) {
      Subspace others = sum(w.c, w.j);
      for (std::size_t b = 0; b < comps.parts.size(); ++b)
        if (b != a) others = sum(others, sres.push(comps.parts[b]));
      family.push_back(others);
    }
  }
  Subspace cs = sum(w.c, w.s);
  for (std::size_t a = 0; a < w.blocks.size(); ++a) {
    Subspace ideal = intersect(centralizer(l, w.blocks[a].space), cs);
    for (std::size_t b = 0; b < w.blocks.size(); ++b)
      if (b != a) ideal = sum(ideal, w.blocks[b].space);
    family.push_back(ideal);
  }
  Subspace meet = whole(l);
  for (const auto& j : family) {
    if (!is_ideal(l, j)) throw InternalError("submaximal family member is not an ideal");
    SubsimpleVerdict q = subsimple(quotient(l, j).algebra);
    if (!q.yes()) throw InternalError("submaximal family member has a quotient that is not subsimple");
    meet = intersect(meet, j);
  }
  if (!meet.is_zero()) throw InternalError("submaximal family does not intersect to zero");
  return family;
}

enum class RepAnswer { yes, no, partial };

struct RepVerdict {
  RepAnswer answer = RepAnswer::no;
  std::vector<Subspace> blocks;         ///< invariant irreducible summands (yes / partial)
  std::vector<Matrix> radical;          ///< trace-form radical certificate (no)
};

/// Complete reducibility of a Lie algebra of operators, with explicit blocks.
inline RepVerdict decomposable_rep(const std::vector<Matrix>& ops, std::size_t d) {
  RepVerdict v;
  OperatorAlgebra env = enveloping_algebra(ops, d);
  v.radical = radical_operators(env);
  if (!v.radical.empty()) return v;
  ModuleSplit split = decompose_module(ops, d, true);
  v.blocks = split.blocks;
  v.answer = split.complete ? RepAnswer::yes : RepAnswer::partial;
  return v;
}

}  // namespace lierad
