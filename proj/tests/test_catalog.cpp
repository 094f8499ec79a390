#include "lierad/report.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lierad;
using catalog::build;

namespace {

struct Case {
  std::string name;
  std::vector<std::size_t> params;
};

const std::vector<Case>& all_cases() {
  static const std::vector<Case> c{
      {"abelian", {0}}, {"abelian", {3}}, {"heisenberg3", {}}, {"borel2", {}}, {"sl", {2}}, {"sl", {3}},
      {"gl", {2}},      {"gl", {3}},      {"t", {1}},          {"t", {2}},     {"t", {3}},  {"t", {4}},
      {"n", {2}},       {"n", {4}},       {"classII", {2}},    {"classII", {3}}, {"classI", {}}, {"cext4", {}},
  };
  return c;
}

/// Computes one named property for comparison with the expected table.
catalog::ExpectedValue compute(const LieAlgebra& l, const std::string& prop) {
  if (prop == "dim") return l.dim();
  if (prop == "centre") return centre(l);
  if (prop == "derived") return bracket_spaces(l, whole(l), whole(l));
  if (prop == "rad") return solvable_radical(l);
  if (prop == "nilradical") return nilradical(l);
  if (prop == "K") return jacobson_ideal(l);
  if (prop == "phi") return frattini_ideal(l);
  if (prop == "levi_radical") return levi_radical(l);
  if (prop == "lower_central_radical") return lower_central_radical(l);
  if (prop == "largest_semisimple_ideal") return largest_semisimple_ideal(l);
  if (prop == "frattini_free") return frattini_free(l).yes;
  if (prop == "jacobson_free") return jacobson_free(l).yes;
  if (prop == "subsimple") return std::string(to_string(subsimple(l).cls));
  if (prop == "r_frattini") return frattini_index(l);
  if (prop == "r_jacobson") return jacobson_index(l);
  if (prop == "solvability_index") return *solvability_index(l);
  if (prop == "simple_component_count") return simple_components(l).parts.size();
  throw std::logic_error("no computation for " + prop);
}

}  // namespace

TEST(Catalog, BuildExamples) {
  EXPECT_EQ(build("t", {2}).dim(), 3u);
  LieAlgebra h = build("heisenberg3");
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_EQ(centre(h).dim(), 1u);
  EXPECT_EQ(build("classII", {2}).dim(), 5u);
  EXPECT_EQ(build("sl", {3}).dim(), 8u);
  EXPECT_EQ(build("gl", {3}).dim(), 9u);
  EXPECT_EQ(build("n", {5}).dim(), 10u);
  EXPECT_EQ(build("classI").dim(), 6u);
  EXPECT_EQ(build("sl", {2}).labels(), (std::vector<std::string>{"h", "e", "f"}));
  EXPECT_EQ(build("borel2").structure(0, 1), Scalar(2) * unit_vector(2, 1));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(build("nope"), catalog::UnknownEntry);
  EXPECT_THROW(build("sl", {1}), catalog::BadParams);
  EXPECT_THROW(build("t"), catalog::BadParams);
  EXPECT_THROW(build("heisenberg3", {2}), catalog::BadParams);
  EXPECT_THROW(catalog::expected_table("nope"), catalog::UnknownEntry);
}

TEST(Catalog, EveryEntryPassesJacobiOracle) {
  for (const auto& c : all_cases()) {
    LieAlgebra l = build(c.name, c.params);
    std::vector<Vector> table;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) table.push_back(l.structure(i, j));
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i + 1; j < l.dim(); ++j)
        for (std::size_t k = j + 1; k < l.dim(); ++k)
          ASSERT_TRUE(is_zero(oracle::jacobi_residual(table, l.dim(), i, j, k))) << l.name();
  }
}

TEST(Catalog, ExpectedTablesHoldExactly) {
  for (const auto& c : all_cases()) {
    LieAlgebra l = build(c.name, c.params);
    for (const auto& e : catalog::expected_table(c.name, c.params)) {
      EXPECT_TRUE(e.tag == "[PAPER]" || e.tag == "[DERIVED]" || e.tag == "[TRIVIAL]");
      EXPECT_EQ(compute(l, e.property), e.value) << l.name() << " " << e.property << " " << e.tag;
    }
  }
}

TEST(Catalog, ListedEntriesBuildAtTheirBounds) {
  for (const auto& e : catalog::entries()) {
    if (e.arity == 0) {
      EXPECT_NO_THROW(build(e.name));
    } else {
      EXPECT_NO_THROW(build(e.name, {e.min_param}));
    }
  }
}

TEST(Catalog, ErratumNoteOnlyWhereTheClaimDiverges) {
  EXPECT_FALSE(catalog::erratum_note("t(3)", 3));
  EXPECT_FALSE(catalog::erratum_note("heisenberg3", 2));
  auto note = catalog::erratum_note("t(5)", 4);
  ASSERT_TRUE(note);
  EXPECT_NE(note->find("log2"), std::string::npos);
}
