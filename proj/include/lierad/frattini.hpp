#pragma once

#include "lierad/structure.hpp"

#include <cstddef>

namespace lierad {

/// Sum of [N,N], Rad(env ad|N)·N and Z ∩ [L,L] for N the nilradical.
/// Every summand lies in each ideal with a Frattini-free quotient.
inline Subspace frattini_obstruction(const LieAlgebra& l) {
  Subspace nil = nilradical(l);
  Subspace out = bracket_spaces(l, nil, nil);
  if (!nil.is_zero()) {
    std::vector<Vector> moved = out.basis_vectors();
    for (const auto& r : radical_operators(module_enveloping(l, nil)))
      for (std::size_t c = 0; c < nil.dim(); ++c) moved.push_back(nil.combine(r.column(c)));
    out = Subspace::span(moved, l.dim());
  }
  return sum(out, intersect(centre(l), bracket_spaces(l, whole(l), whole(l))));
}

/// Smallest ideal with a Frattini-free quotient, by obstruction iteration.
inline Subspace frattini_ideal(const LieAlgebra& l) {
  Subspace acc = zero(l);
  for (;;) {
    Quotient q = quotient(l, acc);
    Subspace obs = frattini_obstruction(q.algebra);
    if (obs.is_zero()) {
      if (!frattini_free(q.algebra).yes) throw WitnessConstructionFailed("quotient by the Frattini candidate");
      break;
    }
    acc = q.preimage(obs);
  }
  if (!contains(jacobson_ideal(l), acc)) throw InternalError("Frattini ideal is not inside the Jacobson ideal");
  if (!contains(acc, intersect(centre(l), bracket_spaces(l, whole(l), whole(l)))))
    throw InternalError("Frattini ideal misses Z ∩ [L,L]");
  return acc;
}

namespace preradicals {

inline Preradical frattini() {
  return {"phi", [](const LieAlgebra& l) { return frattini_ideal(l); }};
}

}  // namespace preradicals

/// r_F = i_s(phi) + 1, cross-checked against the literal superposition count.
inline std::size_t frattini_index(const LieAlgebra& l) {
  IndexRecord rec = superpose_record(preradicals::frattini(), l);
  if (l.dim() == 0) return rec.r;
  auto is = solvability_index(l, rec.stages.at(1));
  if (!is) throw InternalError("Frattini ideal is not solvable");
  if (*is + 1 != rec.r) throw InternalError("Frattini index shortcut disagrees with superposition count");
  return rec.r;
}

struct RadicalIndices {
  std::size_t r_frattini = 0;
  std::size_t r_jacobson = 0;
};

inline RadicalIndices radical_indices(const LieAlgebra& l) { return {frattini_index(l), jacobson_index(l)}; }

}  // namespace lierad
