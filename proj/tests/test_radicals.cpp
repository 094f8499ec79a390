#include "lierad/catalog.hpp"
#include "lierad/frattini.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lierad;
using catalog::build;

namespace {

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> rows;
  for (auto k : idx) rows.push_back(unit_vector(n, k));
  return Subspace::span(rows, n);
}

std::size_t t_index(std::size_t n, std::size_t i, std::size_t j) {
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (a == i && b == j) return k;
      ++k;
    }
  return k;
}

Subspace strict_upper_in_t(std::size_t n) {
  std::vector<Vector> rows;
  const std::size_t d = n * (n + 1) / 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rows.push_back(unit_vector(d, t_index(n, i, j)));
  return Subspace::span(rows, d);
}

Vector identity_in_t(std::size_t n) {
  Vector v(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) v[t_index(n, i, i)] = 1;
  return v;
}

}  // namespace

TEST(Series, DerivedExamples) {
  EXPECT_EQ(derived_series(build("heisenberg3")).dims(), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(derived_series(abelian_algebra(4)).dims(), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(derived_series(build("n", {4})).dims(), (std::vector<std::size_t>{6, 3, 0}));
  LieAlgebra n4 = build("n", {4});
  EXPECT_EQ(derived_series(n4).terms[1], span(6, {1, 2, 4}));  // e13, e14, e24
}

TEST(Series, TermsAreCharacteristicIdeals) {
  for (const auto& l : {build("t", {3}), build("cext4"), build("gl", {2})}) {
    for (const auto& t : derived_series(l).terms) EXPECT_TRUE(is_characteristic(l, t));
    for (const auto& t : lower_central_series(l).terms) EXPECT_TRUE(is_characteristic(l, t));
  }
}

TEST(Series, Indices) {
  EXPECT_EQ(solvability_index(build("n", {3})), 2u);
  EXPECT_FALSE(solvability_index(build("sl", {2})));
  EXPECT_EQ(solvability_index(abelian_algebra(0)), 0u);
  EXPECT_EQ(solvability_index(abelian_algebra(2)), 1u);
  EXPECT_EQ(nilpotency_index(build("heisenberg3")), 2u);
  EXPECT_FALSE(nilpotency_index(build("borel2")));
  EXPECT_TRUE(is_solvable(build("borel2")));
  EXPECT_FALSE(is_nilpotent(build("borel2")));
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(solvability_index(build("n", {n})), oracle::ceil_log2(n)) << n;
}

TEST(SolvableRadical, Examples) {
  EXPECT_TRUE(solvable_radical(build("sl", {2})).is_zero());
  Vector id(4);
  id[0] = id[3] = 1;
  EXPECT_EQ(solvable_radical(build("gl", {2})), Subspace::span({id}, 4));
  EXPECT_TRUE(solvable_radical(build("t", {3})).is_whole());
  EXPECT_EQ(vasilescu_radical(build("gl", {2})), Subspace::span({id}, 4));
  EXPECT_TRUE(vasilescu_radical(build("borel2")).is_whole());
  EXPECT_TRUE(vasilescu_radical(build("sl", {2})).is_zero());
  EXPECT_EQ(solvable_radical(build("classII", {3})), span(11, {8, 9, 10}));
}

TEST(Nilradical, Examples) {
  EXPECT_TRUE(nilradical(build("heisenberg3")).is_whole());
  EXPECT_EQ(nilradical(build("borel2")), span(2, {1}));
  Subspace expected = sum(strict_upper_in_t(3), Subspace::span({identity_in_t(3)}, 6));
  EXPECT_EQ(nilradical(build("t", {3})), expected);
  EXPECT_EQ(nilradical(build("t", {3})).dim(), 4u);
}

TEST(Nilradical, GaussianWeightsAreNotCancelled) {
  // ad h has weights 1 and i on (a, b): no Killing-style cancellation allowed
  Matrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = Scalar::i();
  LieAlgebra l = semidirect_product(abelian_algebra(1), abelian_algebra(2), {d});
  EXPECT_EQ(nilradical(l), span(3, {1, 2}));
  EXPECT_FALSE(oracle::ad_nilpotent(l, unit_vector(3, 0)));
}

TEST(Nilradical, MembershipMatchesOracleOnSamples) {
  std::mt19937 rng(1);
  for (const auto& l : {build("t", {3}), build("cext4"), build("classII", {2}), build("gl", {2})}) {
    Subspace nil = nilradical(l, 20);
    Subspace rad = solvable_radical(l);
    for (int s = 0; s < 10; ++s) {
      Vector r = detail::random_member(rad, rng);
      EXPECT_EQ(oracle::ad_nilpotent(l, r), nil.member(r)) << l.name();
    }
  }
}

TEST(JacobsonIdeal, Examples) {
  EXPECT_EQ(jacobson_ideal(build("borel2")), span(2, {1}));
  EXPECT_TRUE(jacobson_ideal(build("sl", {3})).is_zero());
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(jacobson_ideal(build("t", {n})), strict_upper_in_t(n)) << n;
}

TEST(LeviRadical, Examples) {
  LieAlgebra gl2 = build("gl", {2});
  Subspace sl2 = bracket_spaces(gl2, whole(gl2), whole(gl2));
  EXPECT_EQ(levi_radical(gl2), sl2);
  EXPECT_EQ(sl2.dim(), 3u);
  EXPECT_TRUE(levi_radical(build("t", {4})).is_zero());
  LieAlgebra s = direct_product({build("sl", {2}), abelian_algebra(1)});
  EXPECT_EQ(levi_radical(s), span(4, {0, 1, 2}));
}

TEST(LowerCentralRadical, Examples) {
  EXPECT_TRUE(lower_central_radical(build("heisenberg3")).is_zero());
  EXPECT_EQ(lower_central_radical(build("borel2")), span(2, {1}));
  EXPECT_TRUE(lower_central_radical(build("sl", {2})).is_whole());
}

TEST(FrattiniIdeal, Examples) {
  EXPECT_EQ(frattini_ideal(build("heisenberg3")), span(3, {2}));
  EXPECT_TRUE(frattini_ideal(build("borel2")).is_zero());
  EXPECT_EQ(frattini_ideal(build("cext4")), span(4, {2}));
  EXPECT_EQ(frattini_ideal(build("t", {3})), span(6, {2}));
  LieAlgebra t3 = build("t", {3});
  EXPECT_EQ(frattini_ideal(t3), derived_series(t3).terms[2]);
}

TEST(FrattiniIdeal, QuotientIsFrattiniFree) {
  for (const auto& l : {build("t", {4}), build("cext4"), build("n", {4}), build("heisenberg3")}) {
    Subspace phi = frattini_ideal(l);
    EXPECT_TRUE(frattini_free(quotient(l, phi).algebra).yes) << l.name();
    EXPECT_TRUE(frattini_ideal(quotient(l, phi).algebra).is_zero());
  }
}

TEST(Superpose, Examples) {
  LieAlgebra gl2 = build("gl", {2});
  EXPECT_EQ(superpose(preradicals::derived_step())(gl2), levi_radical(gl2));
  IndexRecord r = superpose_record(preradicals::jacobson(), build("t", {3}));
  EXPECT_TRUE(r.limit().is_zero());
  EXPECT_EQ(r.r, 3u);
  LieAlgebra b = build("borel2");
  EXPECT_EQ(superpose(preradicals::levi())(b), levi_radical(b));
}

TEST(Convolve, Examples) {
  LieAlgebra h = build("heisenberg3");
  EXPECT_TRUE(star(preradicals::centre())(h).is_whole());
  LieAlgebra b = build("borel2");
  EXPECT_EQ(convolve(preradicals::derived_step(), preradicals::centre())(b), span(2, {1}));
  for (const auto& l : {build("t", {3}), build("cext4"), build("classII", {2})}) {
    EXPECT_EQ(star(preradicals::frattini())(l), frattini_ideal(l)) << l.name();
    EXPECT_EQ(star(preradicals::jacobson())(l), jacobson_ideal(l)) << l.name();
    Subspace c = convolve(preradicals::rad(), preradicals::centre())(l);
    EXPECT_TRUE(contains(c, centre(l)));
  }
}

TEST(RadicalIndices, Examples) {
  RadicalIndices t2 = radical_indices(build("t", {2}));
  EXPECT_EQ(t2.r_frattini, 1u);
  EXPECT_EQ(t2.r_jacobson, 2u);
  RadicalIndices t3 = radical_indices(build("t", {3}));
  EXPECT_EQ(t3.r_frattini, 2u);
  EXPECT_EQ(t3.r_jacobson, 3u);
  EXPECT_EQ(jacobson_index(build("t", {5})), 4u);
  RadicalIndices z = radical_indices(abelian_algebra(0));
  EXPECT_EQ(z.r_frattini, 0u);
  EXPECT_EQ(z.r_jacobson, 0u);
}

TEST(InclusionChain, OnCatalog) {
  for (const auto& l : {build("heisenberg3"), build("borel2"), build("t", {4}), build("gl", {3}), build("cext4"),
                        build("classII", {3}), build("classI")}) {
    Subspace d = bracket_spaces(l, whole(l), whole(l));
    Subspace phi = frattini_ideal(l), k = jacobson_ideal(l), n = nilradical(l), r = solvable_radical(l);
    EXPECT_TRUE(contains(phi, intersect(d, centre(l))));
    EXPECT_TRUE(contains(k, phi));
    EXPECT_TRUE(contains(n, k));
    EXPECT_TRUE(contains(r, n));
    if (is_solvable(l)) EXPECT_EQ(k, d);
  }
}
