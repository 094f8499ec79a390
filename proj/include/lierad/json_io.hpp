#pragma once

#include "lierad/lie_ops.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lierad::io {

using json = nlohmann::ordered_json;

inline json scalar_to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar::parse(j.dump());
  if (!j.is_string()) throw ParseError(where + ": scalar must be a string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

inline Vector vector_from_json(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    throw ParseError(where + ": expected an array of " + std::to_string(len) + " scalars");
  Vector v(len);
  for (std::size_t k = 0; k < len; ++k) v[k] = scalar_from_json(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row_vector(r)));
  return a;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  std::vector<Vector> r;
  for (std::size_t k = 0; k < rows; ++k) r.push_back(vector_from_json(j[k], cols, where + "[" + std::to_string(k) + "]"));
  return Matrix::from_rows(r, cols);
}

/// {"dim": k, "basis": [[...], ...]} with echelon rows in ambient coordinates.
inline json subspace_to_json(const Subspace& u) {
  json a = json::array();
  for (std::size_t k = 0; k < u.dim(); ++k) a.push_back(vector_to_json(u.basis_vector(k)));
  return json{{"dim", u.dim()}, {"basis", a}};
}

inline Subspace subspace_from_json(const json& j, std::size_t ambient, const std::string& where) {
  if (!j.is_object() || !j.contains("basis")) throw ParseError(where + ": subspace needs a basis");
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < j["basis"].size(); ++k)
    rows.push_back(vector_from_json(j["basis"][k], ambient, where + ".basis[" + std::to_string(k) + "]"));
  Subspace u = Subspace::span(rows, ambient);
  if (j.contains("dim") && j["dim"].get<std::size_t>() != u.dim())
    throw ParseError(where + ": declared dim disagrees with basis rank");
  return u;
}

inline json algebra_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& c = l.structure(i, j);
      if (is_zero(c)) continue;
      json coeffs = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) coeffs[std::to_string(k)] = c[k].to_string();
      brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return json{{"name", l.name()}, {"dim", n}, {"basis", l.labels()}, {"brackets", brackets}};
}

namespace detail {

inline std::size_t index_field(const json& e, const char* key, std::size_t n, const std::string& where) {
  if (!e.contains(key) || !e[key].is_number_integer()) throw ParseError(where + ": missing integer field '" + key + "'");
  long long v = e[key].get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw ParseError(where + ": index '" + key + "' out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Validating reader; parse problems raise ParseError, algebraic ones AlgebraError.
inline LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError("algebra: missing or invalid 'dim'");
  const std::size_t n = j["dim"].get<std::size_t>();
  std::string name = j.value("name", std::string("unnamed"));
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n) throw ParseError("algebra: 'basis' must list dim labels");
    for (const auto& s : j["basis"]) {
      if (!s.is_string()) throw ParseError("algebra: basis labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("algebra: 'brackets' must be an array");
    for (std::size_t t = 0; t < j["brackets"].size(); ++t) {
      const json& e = j["brackets"][t];
      std::string where = "brackets[" + std::to_string(t) + "]";
      if (!e.is_object()) throw ParseError(where + ": entry must be an object");
      std::size_t a = detail::index_field(e, "i", n, where);
      std::size_t b = detail::index_field(e, "j", n, where);
      if (a >= b) throw ParseError(where + ": require i < j");
      Vector c(n);
      if (e.contains("coeffs")) {
        if (!e["coeffs"].is_object()) throw ParseError(where + ": 'coeffs' must be an object");
        for (const auto& [key, val] : e["coeffs"].items()) {
          std::size_t k = 0;
          try {
            std::size_t used = 0;
            k = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
          } catch (const std::exception&) {
            throw ParseError(where + ": coefficient key '" + key + "' is not an index");
          }
          if (k >= n) throw ParseError(where + ": coefficient index " + key + " out of range");
          c[k] = scalar_from_json(val, where + ".coeffs." + key);
        }
      }
      entries.push_back({a, b, std::move(c)});
    }
  }
  return make_algebra(std::move(name), n, std::move(labels), entries);
}

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path.string());
}

inline LieAlgebra read_algebra(const std::filesystem::path& path) {
  json j = read_json_file(path);
  try {
    return algebra_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Semidirect specification: {"l1": algebra | path, "l0": algebra | path, "phi": [matrix per L1 basis vector]}.
inline LieAlgebra semidirect_from_json(const json& spec, const std::filesystem::path& base_dir = {}) {
  if (!spec.is_object() || !spec.contains("l1") || !spec.contains("l0") || !spec.contains("phi"))
    throw ParseError("semidirect spec needs 'l1', 'l0' and 'phi'");
  auto load = [&](const json& x) {
    if (x.is_string()) return read_algebra(base_dir / x.get<std::string>());
    return algebra_from_json(x);
  };
  LieAlgebra l1 = load(spec["l1"]);
  LieAlgebra l0 = load(spec["l0"]);
  const json& phi = spec["phi"];
  if (!phi.is_array() || phi.size() != l1.dim()) throw ParseError("semidirect spec: 'phi' needs one matrix per L1 basis vector");
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < phi.size(); ++k)
    ops.push_back(matrix_from_json(phi[k], l0.dim(), l0.dim(), "phi[" + std::to_string(k) + "]"));
  return semidirect_product(l1, l0, ops, spec.value("name", std::string{}));
}

}  // namespace lierad::io
