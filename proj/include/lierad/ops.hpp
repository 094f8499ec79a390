#pragma once

#include "lierad/report.hpp"

#include <functional>
#include <map>
#include <string>

namespace lierad::ops {

using io::json;
using Op = std::function<json(const LieAlgebra&)>;

namespace detail {

inline json subspaces(const std::vector<Subspace>& list) {
  json a = json::array();
  for (const auto& s : list) a.push_back(io::subspace_to_json(s));
  return a;
}

inline json series(const SeriesRecord& s) {
  return json{{"dims", s.dims()}, {"stabilized_at", s.stabilized_at}, {"terms", subspaces(s.terms)}};
}

inline json index_record(const IndexRecord& r) {
  return json{{"preradical", r.name}, {"dims", r.dims()}, {"r", r.r}, {"limit", io::subspace_to_json(r.limit())}};
}

inline json optional_count(const std::optional<std::size_t>& v) { return v ? json(*v) : json("none"); }

inline std::map<std::string, Preradical> preradical_table() {
  return {{"D", preradicals::derived_step()},   {"centre", preradicals::centre()},
          {"rad", preradicals::rad()},          {"nilrad", preradicals::nilrad()},
          {"K", preradicals::jacobson()},       {"P", preradicals::levi()},
          {"P_C", preradicals::lower_central()}, {"phi", preradicals::frattini()}};
}

}  // namespace detail

/// Every public analysis, addressable by name from the command line.
inline const std::map<std::string, Op>& registry() {
  static const std::map<std::string, Op> table = [] {
    std::map<std::string, Op> t;
    auto subspace_op = [&t](const std::string& name, std::function<Subspace(const LieAlgebra&)> f) {
      t[name] = [f](const LieAlgebra& l) { return io::subspace_to_json(f(l)); };
    };
    subspace_op("centre", [](const LieAlgebra& l) { return centre(l); });
    subspace_op("derived_algebra", [](const LieAlgebra& l) { return bracket_spaces(l, whole(l), whole(l)); });
    subspace_op("solvable_radical", [](const LieAlgebra& l) { return solvable_radical(l); });
    subspace_op("vasilescu_radical", [](const LieAlgebra& l) { return vasilescu_radical(l); });
    subspace_op("nilradical", [](const LieAlgebra& l) { return nilradical(l); });
    subspace_op("jacobson_ideal", [](const LieAlgebra& l) { return jacobson_ideal(l); });
    subspace_op("frattini_ideal", [](const LieAlgebra& l) { return frattini_ideal(l); });
    subspace_op("levi_radical", [](const LieAlgebra& l) { return levi_radical(l); });
    subspace_op("lower_central_radical", [](const LieAlgebra& l) { return lower_central_radical(l); });
    subspace_op("largest_semisimple_ideal", [](const LieAlgebra& l) { return largest_semisimple_ideal(l); });
    t["derived_series"] = [](const LieAlgebra& l) { return detail::series(derived_series(l)); };
    t["lower_central_series"] = [](const LieAlgebra& l) { return detail::series(lower_central_series(l)); };
    t["solvability_index"] = [](const LieAlgebra& l) { return detail::optional_count(solvability_index(l)); };
    t["nilpotency_index"] = [](const LieAlgebra& l) { return detail::optional_count(nilpotency_index(l)); };
    t["killing_form"] = [](const LieAlgebra& l) { return io::matrix_to_json(killing_form(l)); };
    t["derivations"] = [](const LieAlgebra& l) {
      json a = json::array();
      for (const auto& d : derivation_basis(l)) a.push_back(io::matrix_to_json(d));
      return json{{"dim", a.size()}, {"basis", a}};
    };
    t["radical_indices"] = [](const LieAlgebra& l) {
      RadicalIndices r = radical_indices(l);
      return json{{"r_frattini", r.r_frattini}, {"r_jacobson", r.r_jacobson}};
    };
    t["levi_decomposition"] = [](const LieAlgebra& l) {
      LeviWitness w = levi_decomposition(l);
      return json{{"levi", io::subspace_to_json(w.levi)}, {"radical", io::subspace_to_json(w.radical)}};
    };
    t["simple_components"] = [](const LieAlgebra& l) {
      IdealSplit s = simple_components(l);
      return json{{"components", detail::subspaces(s.parts)}, {"partial", s.partial}};
    };
    t["direct_summands"] = [](const LieAlgebra& l) {
      IdealSplit s = direct_summands(l);
      return json{{"summands", detail::subspaces(s.parts)}, {"partial", s.partial}};
    };
    t["frattini_free"] = [](const LieAlgebra& l) {
      FrattiniVerdict v = frattini_free(l);
      json violations = json::array();
      for (const auto& x : v.violations)
        violations.push_back(json{{"condition", x.id}, {"description", x.description},
                                  {"offending", io::subspace_to_json(x.offending)}});
      json out{{"answer", v.yes}, {"violations", violations}, {"witness", nullptr}};
      if (v.witness) {
        json blocks = json::array();
        for (const auto& b : v.witness->blocks) {
          json weights = json::array();
          for (const auto& w : b.weights) weights.push_back(w.to_string());
          blocks.push_back(json{{"space", io::subspace_to_json(b.space)}, {"weights", weights}});
        }
        out["witness"] = json{{"C", io::subspace_to_json(v.witness->c)},
                              {"S", io::subspace_to_json(v.witness->s)},
                              {"J", io::subspace_to_json(v.witness->j)},
                              {"blocks", blocks}};
      }
      return out;
    };
    t["jacobson_free"] = [](const LieAlgebra& l) {
      JacobsonVerdict v = jacobson_free(l);
      json out{{"answer", v.yes}, {"K", io::subspace_to_json(v.jacobson)}};
      if (v.yes) {
        out["semisimple_part"] = io::subspace_to_json(v.semisimple_part);
        out["central_part"] = io::subspace_to_json(v.central_part);
      }
      return out;
    };
    t["subsimple"] = [](const LieAlgebra& l) {
      SubsimpleVerdict v = subsimple(l);
      return json{{"class", to_string(v.cls)}, {"heuristic_isomorphism", v.heuristic_isomorphism},
                  {"reason", v.reason}, {"parts", detail::subspaces(v.parts)}};
    };
    t["submaximal_witness_family"] = [](const LieAlgebra& l) { return detail::subspaces(submaximal_witness_family(l)); };
    t["adjoint_decomposable"] = [](const LieAlgebra& l) {
      RepVerdict v = decomposable_rep(adjoint_operators(l), l.dim());
      const char* names[] = {"yes", "no", "partial"};
      json radical = json::array();
      for (const auto& m : v.radical) radical.push_back(io::matrix_to_json(m));
      return json{{"answer", names[static_cast<int>(v.answer)]}, {"blocks", detail::subspaces(v.blocks)},
                  {"radical", radical}};
    };
    for (const auto& [name, r] : detail::preradical_table()) {
      Preradical pr = r;
      t["superpose:" + name] = [pr](const LieAlgebra& l) { return detail::index_record(superpose_record(pr, l)); };
      t["star:" + name] = [pr](const LieAlgebra& l) { return detail::index_record(star_record(pr, l)); };
    }
    return t;
  }();
  return table;
}

}  // namespace lierad::ops
