#pragma once

#include "lierad/lie_ops.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lierad::catalog {

class CatalogError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownEntry : public CatalogError {
public:
  explicit UnknownEntry(const std::string& name) : CatalogError("unknown catalog entry: " + name) {}
};

class BadParams : public CatalogError {
public:
  BadParams(const std::string& name, const std::string& what) : CatalogError(name + ": " + what) {}
};

struct EntryInfo {
  std::string name;
  std::size_t arity;  ///< number of integer parameters
  std::size_t min_param;
  std::size_t max_param;
  std::string summary;
};

inline const std::vector<EntryInfo>& entries() {
  static const std::vector<EntryInfo> list{
      {"abelian", 1, 0, 40, "commutative algebra of dimension n"},
      {"heisenberg3", 0, 0, 0, "basis x, y, z with [x,y] = z"},
      {"borel2", 0, 0, 0, "upper triangular sl2: [h,e] = 2e"},
      {"sl", 1, 2, 6, "traceless n x n matrices"},
      {"gl", 1, 1, 6, "all n x n matrices"},
      {"t", 1, 1, 8, "upper triangular n x n matrices"},
      {"n", 1, 1, 8, "strictly upper triangular n x n matrices"},
      {"classII", 1, 2, 5, "sl(n) acting on C^n by its defining representation"},
      {"classI", 0, 0, 0, "sl2 + sl2"},
      {"cext4", 0, 0, 0, "basis x, y, n1, n2 with [x,y] = n1, [x,n2] = n2"},
  };
  return list;
}

inline const EntryInfo& info(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownEntry(name);
}

/// Display name used by built algebras, e.g. "t(3)" or "heisenberg3".
inline std::string display_name(const std::string& name, const std::vector<std::size_t>& params) {
  if (params.empty()) return name;
  return name + "(" + std::to_string(params.front()) + ")";
}

namespace detail {

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline std::string e_label(std::size_t i, std::size_t j) { return "e" + std::to_string(i + 1) + std::to_string(j + 1); }

inline LieAlgebra sl(std::size_t n) {
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Matrix h(n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    mats.push_back(h);
    labels.push_back("h" + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      mats.push_back(unit_matrix(n, i, j));
      labels.push_back(e_label(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      mats.push_back(unit_matrix(n, i, j));
      labels.push_back(e_label(i, j));
    }
  if (n == 2) labels = {"h", "e", "f"};
  return matrix_lie_algebra("sl(" + std::to_string(n) + ")", labels, mats);
}

inline LieAlgebra matrix_units(const std::string& name, std::size_t n, bool upper_only, bool strict) {
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (upper_only && (j < i || (strict && j == i))) continue;
      mats.push_back(unit_matrix(n, i, j));
      labels.push_back(e_label(i, j));
    }
  return matrix_lie_algebra(name + "(" + std::to_string(n) + ")", labels, mats);
}

inline Vector coords(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vector v(n);
  for (auto [k, c] : entries) v[k] = Scalar(c);
  return v;
}

}  // namespace detail

inline LieAlgebra build(const std::string& name, const std::vector<std::size_t>& params = {}) {
  const EntryInfo& e = info(name);
  if (params.size() != e.arity)
    throw BadParams(name, "expects " + std::to_string(e.arity) + " parameter(s), got " + std::to_string(params.size()));
  const std::size_t p = params.empty() ? 0 : params.front();
  if (e.arity == 1 && (p < e.min_param || p > e.max_param))
    throw BadParams(name, "parameter must lie in [" + std::to_string(e.min_param) + ", " +
                              std::to_string(e.max_param) + "]");
  if (name == "abelian") return abelian_algebra(p);
  if (name == "heisenberg3")
    return make_algebra("heisenberg3", 3, {"x", "y", "z"}, {{0, 1, detail::coords(3, {{2, 1}})}});
  if (name == "borel2") return make_algebra("borel2", 2, {"h", "e"}, {{0, 1, detail::coords(2, {{1, 2}})}});
  if (name == "sl") return detail::sl(p);
  if (name == "gl") return detail::matrix_units("gl", p, false, false);
  if (name == "t") return detail::matrix_units("t", p, true, false);
  if (name == "n") return detail::matrix_units("n", p, true, true);
  if (name == "classII") {
    LieAlgebra s = detail::sl(p);
    std::vector<Matrix> phi;
    // basis vectors of sl(n) are the matrices themselves; recover them from the builder order
    for (std::size_t k = 0; k + 1 < p; ++k) {
      Matrix h(p, p);
      h(k, k) = 1;
      h(k + 1, k + 1) = -1;
      phi.push_back(h);
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) phi.push_back(detail::unit_matrix(p, i, j));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < i; ++j) phi.push_back(detail::unit_matrix(p, i, j));
    std::vector<std::string> vlabels;
    for (std::size_t k = 0; k < p; ++k) vlabels.push_back("v" + std::to_string(k + 1));
    LieAlgebra x(std::string("abelian(") + std::to_string(p) + ")", vlabels, std::vector<Vector>(p * p, Vector(p)));
    return semidirect_product(s, x, phi, "classII(" + std::to_string(p) + ")");
  }
  if (name == "classI") {
    LieAlgebra s = detail::sl(2);
    LieAlgebra a = s, b = s;
    LieAlgebra out = direct_product({a, b}, "classI");
    std::vector<std::string> labels{"h1", "e1", "f1", "h2", "e2", "f2"};
    std::vector<Vector> table;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) table.push_back(out.structure(i, j));
    return LieAlgebra("classI", labels, table);
  }
  if (name == "cext4")
    return make_algebra("cext4", 4, {"x", "y", "n1", "n2"},
                        {{0, 1, detail::coords(4, {{2, 1}})}, {0, 3, detail::coords(4, {{3, 1}})}});
  throw UnknownEntry(name);
}

// ---------------------------------------------------------------------------
// Expected properties

using ExpectedValue = std::variant<bool, std::size_t, std::string, Subspace>;

struct Expectation {
  std::string property;
  ExpectedValue value;
  std::string tag;  ///< "[PAPER]", "[DERIVED]" or "[TRIVIAL]"
};

inline std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

namespace detail {

inline Subspace span_units(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vector> rows;
  for (auto k : idx) rows.push_back(unit_vector(n, k));
  return Subspace::span(rows, n);
}

/// Positions of E_ij within the row-major upper triangular basis of t(n).
inline std::size_t t_index(std::size_t n, std::size_t i, std::size_t j) {
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (a == i && b == j) return k;
      ++k;
    }
  throw std::out_of_range("t_index");
}

}  // namespace detail

inline std::vector<Expectation> expected_table(const std::string& name, const std::vector<std::size_t>& params = {}) {
  const LieAlgebra l = build(name, params);
  const std::size_t d = l.dim();
  const std::size_t p = params.empty() ? 0 : params.front();
  std::vector<Expectation> out;
  auto add = [&](std::string prop, ExpectedValue v, std::string tag) {
    out.push_back({std::move(prop), std::move(v), std::move(tag)});
  };
  add("dim", d, "[TRIVIAL]");
  const Subspace none = Subspace::zero(d), all = Subspace::whole(d);
  if (name == "abelian") {
    add("centre", all, "[TRIVIAL]");
    add("rad", all, "[TRIVIAL]");
    add("nilradical", all, "[TRIVIAL]");
    add("K", none, "[TRIVIAL]");
    add("phi", none, "[TRIVIAL]");
    add("jacobson_free", true, "[TRIVIAL]");
  } else if (name == "heisenberg3") {
    Subspace z = detail::span_units(3, {2});
    add("centre", z, "[PAPER]");
    add("derived", z, "[PAPER]");
    add("phi", z, "[PAPER]");
    add("K", z, "[DERIVED]");
    add("nilradical", all, "[TRIVIAL]");
    add("frattini_free", false, "[PAPER]");
    add("subsimple", std::string("not_subsimple"), "[PAPER]");
  } else if (name == "borel2") {
    Subspace e = detail::span_units(2, {1});
    add("K", e, "[PAPER]");
    add("phi", none, "[PAPER]");
    add("nilradical", e, "[DERIVED]");
    add("lower_central_radical", e, "[DERIVED]");
    add("frattini_free", true, "[PAPER]");
    add("jacobson_free", false, "[DERIVED]");
    add("subsimple", std::string("classII"), "[PAPER]");
  } else if (name == "sl") {
    add("rad", none, "[TRIVIAL]");
    add("centre", none, "[DERIVED]");
    add("derived", all, "[DERIVED]");
    add("levi_radical", all, "[TRIVIAL]");
    add("subsimple", std::string("simple"), "[TRIVIAL]");
    add("frattini_free", true, "[TRIVIAL]");
  } else if (name == "gl") {
    Vector id(d);
    for (std::size_t i = 0; i < p; ++i) id[i * p + i] = 1;
    add("rad", Subspace::span({id}, d), "[DERIVED]");
    add("jacobson_free", true, "[PAPER]");
    add("K", none, "[PAPER]");
  } else if (name == "t") {
    std::vector<std::size_t> strict;
    Vector id(d);
    for (std::size_t i = 0; i < p; ++i) {
      id[detail::t_index(p, i, i)] = 1;
      for (std::size_t j = i + 1; j < p; ++j) strict.push_back(detail::t_index(p, i, j));
    }
    Subspace nn = detail::span_units(d, strict);
    add("K", nn, "[PAPER]");
    add("nilradical", sum(nn, Subspace::span({id}, d)), "[DERIVED]");
    add("rad", all, "[TRIVIAL]");
    add("r_jacobson", ceil_log2(p) + 1, p <= 3 ? "[PAPER]" : "[DERIVED]");
    if (p == 3) add("phi", detail::span_units(d, {detail::t_index(3, 0, 2)}), "[PAPER]");
    if (p == 2) add("phi", none, "[PAPER]");
    if (p <= 3) add("r_frattini", p == 1 ? std::size_t{1} : p - 1, p == 1 ? "[TRIVIAL]" : "[PAPER]");
  } else if (name == "n") {
    add("solvability_index", ceil_log2(p), "[DERIVED]");
    add("nilradical", all, "[TRIVIAL]");
  } else if (name == "classII") {
    add("subsimple", std::string("classII"), "[PAPER]");
    add("frattini_free", true, "[PAPER]");
    add("largest_semisimple_ideal", none, "[PAPER]");
    add("rad", detail::span_units(d, [&] {
          std::vector<std::size_t> v;
          for (std::size_t k = p * p - 1; k < d; ++k) v.push_back(k);
          return v;
        }()),
        "[PAPER]");
  } else if (name == "classI") {
    add("subsimple", std::string("classI"), "[PAPER]");
    add("frattini_free", true, "[PAPER]");
    add("simple_component_count", std::size_t{2}, "[PAPER]");
  } else if (name == "cext4") {
    add("phi", detail::span_units(4, {2}), "[DERIVED]");
    add("frattini_free", false, "[DERIVED]");
  }
  return out;
}

/// Flags t(n) with n >= 4, where the computed r_J differs from the value n.
inline std::optional<std::string> erratum_note(const std::string& algebra_name, std::size_t r_jacobson) {
  if (algebra_name.rfind("t(", 0) != 0 || algebra_name.back() != ')') return std::nullopt;
  std::size_t n = 0;
  try {
    n = std::stoul(algebra_name.substr(2, algebra_name.size() - 3));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (n < 4 || r_jacobson == n) return std::nullopt;
  return "r_jacobson(t(" + std::to_string(n) + ")) = " + std::to_string(r_jacobson) +
         " = ceil(log2 " + std::to_string(n) + ") + 1, not " + std::to_string(n) +
         " (erratum: i_s(n(n)) = ceil(log2 n), so the index formula r_J(t(n)) = n fails for n >= 4)";
}

}  // namespace lierad::catalog
