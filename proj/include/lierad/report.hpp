#pragma once

#include "lierad/catalog.hpp"
#include "lierad/frattini.hpp"
#include "lierad/json_io.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lierad {

struct ReportBlock {
  Subspace space;
  std::vector<Scalar> weights;
  bool operator==(const ReportBlock&) const = default;
};

struct ReportWitness {
  Subspace c, s, j;
  std::vector<ReportBlock> blocks;
  bool operator==(const ReportWitness&) const = default;
};

struct ReportViolation {
  int id = 0;
  std::string description;
  Subspace offending;
  bool operator==(const ReportViolation&) const = default;
};

struct StructureReport {
  static constexpr int kSchema = 1;
  int schema = kSchema;
  std::string name;
  std::size_t dim = 0;

  bool abelian = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_index;
  bool solvable = false;
  std::optional<std::size_t> solvability_index;
  bool semisimple = false;
  bool simple = false;

  std::size_t centre_dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;

  /// centre, derived, rad, nilradical, K, phi, levi_radical, lower_central_radical,
  /// largest_semisimple_ideal, levi_factor
  std::vector<std::pair<std::string, Subspace>> subspaces;

  std::size_t r_frattini = 0;
  std::size_t r_jacobson = 0;

  std::string subsimple_class;
  bool subsimple_heuristic = false;
  std::string subsimple_reason;

  bool frattini_free = false;
  std::vector<ReportViolation> frattini_violations;
  std::optional<ReportWitness> frattini_witness;

  bool jacobson_free = false;
  std::optional<Subspace> jacobson_semisimple_part;
  std::optional<Subspace> jacobson_central_part;

  std::vector<std::size_t> summand_dims;
  bool summands_partial = false;

  std::vector<std::string> notes;

  bool operator==(const StructureReport&) const = default;

  const Subspace& subspace(const std::string& key) const {
    for (const auto& [k, v] : subspaces)
      if (k == key) return v;
    throw std::out_of_range("report has no subspace " + key);
  }
};

inline StructureReport analyze(const LieAlgebra& l) {
  StructureReport r;
  r.name = l.name();
  r.dim = l.dim();
  r.abelian = l.is_abelian();
  SeriesRecord ds = derived_series(l), lcs = lower_central_series(l);
  r.derived_dims = ds.dims();
  r.lower_central_dims = lcs.dims();
  r.solvable = ds.limit().is_zero();
  if (r.solvable) r.solvability_index = ds.stabilized_at;
  r.nilpotent = lcs.limit().is_zero();
  if (r.nilpotent) r.nilpotency_index = lcs.stabilized_at;

  Subspace z = centre(l);
  r.centre_dim = z.dim();
  Subspace rad = solvable_radical(l);
  r.semisimple = rad.is_zero() && l.dim() > 0;
  if (r.semisimple) {
    IdealSplit comps = simple_components(l);
    r.simple = comps.parts.size() == 1 && !comps.partial;
  }
  LeviWitness levi = levi_decomposition(l);
  r.subspaces = {
      {"centre", z},
      {"derived", bracket_spaces(l, whole(l), whole(l))},
      {"rad", rad},
      {"nilradical", nilradical(l)},
      {"K", jacobson_ideal(l)},
      {"phi", frattini_ideal(l)},
      {"levi_radical", ds.limit()},
      {"lower_central_radical", lcs.limit()},
      {"largest_semisimple_ideal", largest_semisimple_ideal(l)},
      {"levi_factor", levi.levi},
  };
  RadicalIndices idx = radical_indices(l);
  r.r_frattini = idx.r_frattini;
  r.r_jacobson = idx.r_jacobson;

  SubsimpleVerdict sv = subsimple(l);
  r.subsimple_class = to_string(sv.cls);
  r.subsimple_heuristic = sv.heuristic_isomorphism;
  r.subsimple_reason = sv.reason;

  FrattiniVerdict fv = frattini_free(l);
  r.frattini_free = fv.yes;
  for (const auto& v : fv.violations) r.frattini_violations.push_back({v.id, v.description, v.offending});
  if (fv.witness) {
    ReportWitness w{fv.witness->c, fv.witness->s, fv.witness->j, {}};
    for (const auto& b : fv.witness->blocks) w.blocks.push_back({b.space, b.weights});
    r.frattini_witness = std::move(w);
  }

  JacobsonVerdict jv = jacobson_free(l);
  r.jacobson_free = jv.yes;
  if (jv.yes) {
    r.jacobson_semisimple_part = jv.semisimple_part;
    r.jacobson_central_part = jv.central_part;
  }

  IdealSplit summands = direct_summands(l);
  for (const auto& p : summands.parts) r.summand_dims.push_back(p.dim());
  std::sort(r.summand_dims.rbegin(), r.summand_dims.rend());
  r.summands_partial = summands.partial;

  if (auto note = catalog::erratum_note(l.name(), r.r_jacobson)) r.notes.push_back(*note);
  if (sv.heuristic_isomorphism) r.notes.push_back("class I verdict rests on the dimension and rank proxy only");
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace io {

namespace detail {

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json dims_json(const std::vector<std::size_t>& d) { return json(d); }

}  // namespace detail

inline json report_to_json(const StructureReport& r) {
  json subspaces = json::object();
  for (const auto& [k, v] : r.subspaces) subspaces[k] = subspace_to_json(v);
  json violations = json::array();
  for (const auto& v : r.frattini_violations)
    violations.push_back(json{{"condition", v.id}, {"description", v.description}, {"offending", subspace_to_json(v.offending)}});
  json witness = nullptr;
  if (r.frattini_witness) {
    json blocks = json::array();
    for (const auto& b : r.frattini_witness->blocks) {
      json weights = json::array();
      for (const auto& w : b.weights) weights.push_back(w.to_string());
      blocks.push_back(json{{"space", subspace_to_json(b.space)}, {"weights", weights}});
    }
    witness = json{{"C", subspace_to_json(r.frattini_witness->c)},
                   {"S", subspace_to_json(r.frattini_witness->s)},
                   {"J", subspace_to_json(r.frattini_witness->j)},
                   {"blocks", blocks}};
  }
  json jac = json{{"answer", r.jacobson_free}};
  jac["semisimple_part"] = r.jacobson_semisimple_part ? subspace_to_json(*r.jacobson_semisimple_part) : json(nullptr);
  jac["central_part"] = r.jacobson_central_part ? subspace_to_json(*r.jacobson_central_part) : json(nullptr);
  return json{
      {"schema", r.schema},
      {"name", r.name},
      {"dim", r.dim},
      {"flags",
       {{"abelian", r.abelian},
        {"nilpotent", r.nilpotent},
        {"nilpotency_index", detail::optional_to_json(r.nilpotency_index)},
        {"solvable", r.solvable},
        {"solvability_index", detail::optional_to_json(r.solvability_index)},
        {"semisimple", r.semisimple},
        {"simple", r.simple}}},
      {"centre_dim", r.centre_dim},
      {"derived_dims", r.derived_dims},
      {"lower_central_dims", r.lower_central_dims},
      {"subspaces", subspaces},
      {"indices", {{"r_frattini", r.r_frattini}, {"r_jacobson", r.r_jacobson}}},
      {"verdicts",
       {{"subsimple", {{"class", r.subsimple_class}, {"heuristic_isomorphism", r.subsimple_heuristic}, {"reason", r.subsimple_reason}}},
        {"frattini_free", {{"answer", r.frattini_free}, {"violations", violations}, {"witness", witness}}},
        {"jacobson_free", jac}}},
      {"summands", {{"dims", r.summand_dims}, {"partial", r.summands_partial}}},
      {"notes", r.notes},
  };
}

inline StructureReport report_from_json(const json& j) {
  try {
    StructureReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != StructureReport::kSchema) throw ParseError("report: unsupported schema " + std::to_string(r.schema));
    r.name = j.at("name").get<std::string>();
    r.dim = j.at("dim").get<std::size_t>();
    const json& f = j.at("flags");
    r.abelian = f.at("abelian").get<bool>();
    r.nilpotent = f.at("nilpotent").get<bool>();
    if (!f.at("nilpotency_index").is_null()) r.nilpotency_index = f["nilpotency_index"].get<std::size_t>();
    r.solvable = f.at("solvable").get<bool>();
    if (!f.at("solvability_index").is_null()) r.solvability_index = f["solvability_index"].get<std::size_t>();
    r.semisimple = f.at("semisimple").get<bool>();
    r.simple = f.at("simple").get<bool>();
    r.centre_dim = j.at("centre_dim").get<std::size_t>();
    r.derived_dims = j.at("derived_dims").get<std::vector<std::size_t>>();
    r.lower_central_dims = j.at("lower_central_dims").get<std::vector<std::size_t>>();
    for (const auto& [k, v] : j.at("subspaces").items()) r.subspaces.emplace_back(k, subspace_from_json(v, r.dim, k));
    r.r_frattini = j.at("indices").at("r_frattini").get<std::size_t>();
    r.r_jacobson = j.at("indices").at("r_jacobson").get<std::size_t>();
    const json& v = j.at("verdicts");
    r.subsimple_class = v.at("subsimple").at("class").get<std::string>();
    r.subsimple_heuristic = v.at("subsimple").at("heuristic_isomorphism").get<bool>();
    r.subsimple_reason = v.at("subsimple").at("reason").get<std::string>();
    const json& ff = v.at("frattini_free");
    r.frattini_free = ff.at("answer").get<bool>();
    for (const auto& x : ff.at("violations"))
      r.frattini_violations.push_back({x.at("condition").get<int>(), x.at("description").get<std::string>(),
                                       subspace_from_json(x.at("offending"), r.dim, "offending")});
    if (!ff.at("witness").is_null()) {
      const json& w = ff["witness"];
      ReportWitness rw{subspace_from_json(w.at("C"), r.dim, "C"), subspace_from_json(w.at("S"), r.dim, "S"),
                       subspace_from_json(w.at("J"), r.dim, "J"), {}};
      for (const auto& b : w.at("blocks")) {
        ReportBlock rb{subspace_from_json(b.at("space"), r.dim, "block"), {}};
        for (const auto& s : b.at("weights")) rb.weights.push_back(scalar_from_json(s, "weight"));
        rw.blocks.push_back(std::move(rb));
      }
      r.frattini_witness = std::move(rw);
    }
    const json& jf = v.at("jacobson_free");
    r.jacobson_free = jf.at("answer").get<bool>();
    if (!jf.at("semisimple_part").is_null())
      r.jacobson_semisimple_part = subspace_from_json(jf["semisimple_part"], r.dim, "semisimple_part");
    if (!jf.at("central_part").is_null()) r.jacobson_central_part = subspace_from_json(jf["central_part"], r.dim, "central_part");
    r.summand_dims = j.at("summands").at("dims").get<std::vector<std::size_t>>();
    r.summands_partial = j.at("summands").at("partial").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace io

inline std::string report_to_text(const StructureReport& r) {
  std::ostringstream out;
  auto dims = [](const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t k = 0; k < d.size(); ++k) s += (k ? ", " : "") + std::to_string(d[k]);
    return s;
  };
  out << r.name << " (dim " << r.dim << ")\n";
  out << "  abelian: " << (r.abelian ? "yes" : "no") << "\n";
  out << "  nilpotent: " << (r.nilpotent ? "yes, index " + std::to_string(*r.nilpotency_index) : "no") << "\n";
  out << "  solvable: " << (r.solvable ? "yes, i_s = " + std::to_string(*r.solvability_index) : "no") << "\n";
  out << "  semisimple: " << (r.semisimple ? "yes" : "no") << ", simple: " << (r.simple ? "yes" : "no") << "\n";
  out << "  centre dim: " << r.centre_dim << "\n";
  out << "  derived series dims: " << dims(r.derived_dims) << "\n";
  out << "  lower central series dims: " << dims(r.lower_central_dims) << "\n";
  for (const auto& [k, v] : r.subspaces) out << "  " << k << ": " << v.to_string() << "\n";
  out << "  r_frattini: " << r.r_frattini << ", r_jacobson: " << r.r_jacobson << "\n";
  out << "  subsimple: " << r.subsimple_class << (r.subsimple_heuristic ? " (heuristic isomorphism)" : "") << ", "
      << r.subsimple_reason << "\n";
  out << "  frattini-free: " << (r.frattini_free ? "yes" : "no") << "\n";
  for (const auto& v : r.frattini_violations)
    out << "    condition " << v.id << " fails: " << v.description << ", offending " << v.offending.to_string() << "\n";
  if (r.frattini_witness) {
    out << "    C = " << r.frattini_witness->c.to_string() << "\n";
    out << "    S = " << r.frattini_witness->s.to_string() << "\n";
    out << "    J = " << r.frattini_witness->j.to_string() << " in " << r.frattini_witness->blocks.size() << " block(s)\n";
  }
  out << "  jacobson-free: " << (r.jacobson_free ? "yes" : "no") << "\n";
  out << "  direct summand dims: " << dims(r.summand_dims) << (r.summands_partial ? " (partial split)" : "") << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Invariant suite

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline Subspace push_ideal_value(const LieAlgebra& l, const Subspace& ideal, const Preradical& r) {
  Restriction res = induced_algebra(l, ideal);
  return res.push(r(res.algebra));
}

}  // namespace detail

/// Runs the radical and structure invariants on one algebra; exceptions count as failures.
inline std::vector<CheckResult> verify(const LieAlgebra& l, std::size_t nil_samples = 50) {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, const std::function<bool()>& f) {
    CheckResult c{std::move(name), false, {}};
    try {
      c.pass = f();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  Subspace all = whole(l);
  Subspace derived = bracket_spaces(l, all, all);
  Subspace z = centre(l);
  Subspace rad, nil, k, phi;
  check("rad certificate: solvable ideal with semisimple quotient", [&] {
    rad = solvable_radical(l);
    return true;
  });
  check("nilradical: nilpotent ideal, membership agrees with ad-nilpotency on samples", [&] {
    nil = nilradical(l, nil_samples);
    return true;
  });
  check("K = [L, rad L] is a nilpotent ideal", [&] {
    k = jacobson_ideal(l);
    return true;
  });
  check("Frattini ideal: quotient is Frattini-free with witness", [&] {
    phi = frattini_ideal(l);
    return true;
  });
  check("Z ∩ [L,L] ⊆ phi", [&] { return contains(phi, intersect(z, derived)); });
  check("phi ⊆ K", [&] { return contains(k, phi); });
  check("K ⊆ nilradical", [&] { return contains(nil, k); });
  check("nilradical ⊆ rad", [&] { return contains(rad, nil); });
  check("solvable L has K = [L,L]", [&] { return !is_solvable(l) || k == derived; });

  Subspace levi_rad = levi_radical(l);
  check("levi radical is perfect with solvable quotient", [&] {
    return bracket_spaces(l, levi_rad, levi_rad) == levi_rad && is_solvable(quotient(l, levi_rad).algebra);
  });
  check("Levi witness invariants, Levi factor inside the levi radical", [&] {
    LeviWitness w = levi_decomposition(l);
    return !check_levi_witness(l, w) && contains(levi_rad, w.levi);
  });
  check("superpose(D) = levi radical = superpose(P_C)", [&] {
    return superpose(preradicals::derived_step())(l) == levi_rad &&
           superpose(preradicals::lower_central())(l) == levi_rad;
  });
  check("iterating K reaches zero", [&] { return superpose(preradicals::jacobson())(l).is_zero(); });
  check("star(phi) = phi and star(K) = K", [&] {
    return star(preradicals::frattini())(l) == phi && star(preradicals::jacobson())(l) == k;
  });

  RadicalIndices idx{};
  check("index shortcuts agree with superposition counts", [&] {
    idx = radical_indices(l);
    return true;
  });
  check("index sandwich i_s(N) <= r_F <= r_J = i_s(K)+1 <= i_s(N)+1, r_J <= r_F + 1", [&] {
    std::size_t isn = *solvability_index(l, nil), isk = *solvability_index(l, k);
    return isn <= idx.r_frattini && idx.r_frattini <= idx.r_jacobson && idx.r_jacobson == isk + 1 &&
           idx.r_jacobson <= isn + 1 && idx.r_jacobson <= idx.r_frattini + 1;
  });
  check("nilpotent L has phi = K = [L,L] and r_F = r_J = i_s(L)", [&] {
    if (!is_nilpotent(l)) return true;
    std::size_t is = *solvability_index(l);
    return phi == k && k == derived && idx.r_frattini == is && idx.r_jacobson == is;
  });

  FrattiniVerdict fv;
  check("Frattini-free verdict agrees with phi = 0", [&] {
    fv = frattini_free(l);
    return fv.yes == phi.is_zero();
  });
  check("Frattini-free witness passes every invariant", [&] {
    return !fv.witness || check_frattini_witness(l, *fv.witness).empty();
  });
  check("Frattini-free and solvable implies L_[2] = 0", [&] {
    if (!fv.yes || !is_solvable(l)) return true;
    return bracket_spaces(l, derived, derived).is_zero();
  });
  check("Frattini-free implies i_s(rad) <= 2 and J contains the sampled commutative ideals", [&] {
    if (!fv.yes) return true;
    if (*solvability_index(l, rad) > 2) return false;
    for (const auto& cand : {z, nil, intersect(nil, derived), bracket_spaces(l, all, nil)})
      if (is_ideal(l, cand) && bracket_spaces(l, cand, cand).is_zero() && !contains(fv.witness->j, cand)) return false;
    return true;
  });
  check("submaximal family: phi ⊆ J, L/J subsimple, intersection zero", [&] {
    if (!fv.yes) return true;
    auto family = submaximal_witness_family(l);
    Subspace meet = all;
    for (const auto& j : family) {
      if (!contains(j, phi) || !subsimple(quotient(l, j).algebra).yes()) return false;
      meet = intersect(meet, j);
    }
    return meet.is_zero();
  });

  SubsimpleVerdict sv;
  check("subsimple implies Frattini-free", [&] {
    sv = subsimple(l);
    return !sv.yes() || fv.yes;
  });
  check("subsimple of dim >= 2 has zero centre", [&] { return !sv.yes() || l.dim() < 2 || z.is_zero(); });
  check("subsimple and solvable implies dim <= 2, nilpotent implies dim <= 1", [&] {
    if (!sv.yes()) return true;
    if (is_nilpotent(l) && l.dim() > 1) return false;
    return !is_solvable(l) || l.dim() <= 2;
  });
  check("Jacobson-free verdict and decomposition", [&] {
    JacobsonVerdict jv = jacobson_free(l);
    if (jv.yes && is_solvable(l) && !l.is_abelian()) return false;
    return jv.yes == k.is_zero();
  });

  std::vector<Subspace> ideals{z, derived, rad, nil, k, phi, levi_rad};
  check("balancedness: phi(I) ⊆ phi(L) and K(I) ⊆ K(L) on sampled ideals", [&] {
    for (const auto& ideal : ideals) {
      if (!contains(phi, detail::push_ideal_value(l, ideal, preradicals::frattini()))) return false;
      if (!contains(k, detail::push_ideal_value(l, ideal, preradicals::jacobson()))) return false;
    }
    return true;
  });
  check("largest semisimple ideal is hereditary on sampled ideals", [&] {
    Preradical s{"S", [](const LieAlgebra& a) { return largest_semisimple_ideal(a); }};
    Subspace sl = s(l);
    for (const auto& ideal : ideals)
      if (detail::push_ideal_value(l, ideal, s) != intersect(ideal, sl)) return false;
    return true;
  });
  if (l.dim() <= 8) {
    check("derived and lower central terms are characteristic", [&] {
      for (const auto& t : derived_series(l).terms)
        if (!is_characteristic(l, t)) return false;
      for (const auto& t : lower_central_series(l).terms)
        if (!is_characteristic(l, t)) return false;
      return true;
    });
  }
  return out;
}

}  // namespace lierad
