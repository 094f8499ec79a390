#include "lierad/catalog.hpp"
#include "lierad/frattini.hpp"

#include <gtest/gtest.h>

using namespace lierad;
using catalog::build;

namespace {

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> rows;
  for (auto k : idx) rows.push_back(unit_vector(n, k));
  return Subspace::span(rows, n);
}

std::vector<std::size_t> dims(const std::vector<Subspace>& parts) {
  std::vector<std::size_t> d;
  for (const auto& p : parts) d.push_back(p.dim());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Levi, Examples) {
  LieAlgebra gl2 = build("gl", {2});
  LeviWitness w = levi_decomposition(gl2);
  EXPECT_EQ(w.levi, bracket_spaces(gl2, whole(gl2), whole(gl2)));
  EXPECT_EQ(w.radical.dim(), 1u);
  EXPECT_TRUE(levi_decomposition(build("t", {3})).levi.is_zero());
  LieAlgebra c2 = build("classII", {2});
  LeviWitness wc = levi_decomposition(c2);
  EXPECT_EQ(wc.levi.dim(), 3u);
  EXPECT_EQ(wc.radical, span(5, {3, 4}));
}

TEST(Levi, NonSplitComplementIsCorrected) {
  // sl2 acting on its adjoint module, with the complement chosen in shifted coordinates
  LieAlgebra s = build("sl", {2});
  std::vector<Matrix> ad;
  for (std::size_t k = 0; k < 3; ++k) ad.push_back(s.ad_basis(k));
  LieAlgebra l = semidirect_product(s, abelian_algebra(3), ad);
  // change of basis b_k -> b_k + v_{k} keeps rad = span(v) but moves the obvious complement
  std::vector<Vector> table(36, Vector(6));
  Matrix p = Matrix::identity(6);
  for (std::size_t k = 0; k < 3; ++k) p(3 + (k + 1) % 3, k) = 1;
  Matrix pinv = Matrix::identity(6);
  for (std::size_t k = 0; k < 3; ++k) pinv(3 + (k + 1) % 3, k) = -1;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) table[i * 6 + j] = pinv * l.bracket(p.column(i), p.column(j));
  LieAlgebra twisted("twisted", {"a", "b", "c", "v1", "v2", "v3"}, table);
  LeviWitness w = levi_decomposition(twisted);
  EXPECT_FALSE(check_levi_witness(twisted, w));
  EXPECT_EQ(w.levi.dim(), 3u);
}

TEST(LargestSemisimpleIdeal, Examples) {
  LieAlgebra a = direct_product({build("sl", {2}), abelian_algebra(2)});
  EXPECT_EQ(largest_semisimple_ideal(a), span(5, {0, 1, 2}));
  EXPECT_TRUE(largest_semisimple_ideal(build("classII", {2})).is_zero());
  EXPECT_TRUE(largest_semisimple_ideal(build("sl", {3})).is_whole());
}

TEST(LargestSemisimpleIdeal, Hereditary) {
  LieAlgebra l = direct_product({build("classII", {2}), build("sl", {2}), build("borel2")});
  Subspace s = largest_semisimple_ideal(l);
  for (const auto& ideal : {solvable_radical(l), bracket_spaces(l, whole(l), whole(l)), factor_block({5, 3, 2}, 0),
                            sum(factor_block({5, 3, 2}, 1), factor_block({5, 3, 2}, 2))}) {
    Restriction r = induced_algebra(l, ideal);
    EXPECT_EQ(r.push(largest_semisimple_ideal(r.algebra)), intersect(ideal, s));
  }
}

TEST(SimpleComponents, Examples) {
  EXPECT_EQ(dims(simple_components(build("classI")).parts), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(simple_components(build("sl", {2})).parts.size(), 1u);
  IdealSplit s = simple_components(direct_product({build("sl", {3}), build("sl", {2})}));
  EXPECT_FALSE(s.partial);
  EXPECT_EQ(dims(s.parts), (std::vector<std::size_t>{3, 8}));
  EXPECT_THROW(simple_components(build("borel2")), NotSemisimple);
}

TEST(FrattiniFree, Examples) {
  FrattiniVerdict b = frattini_free(build("borel2"));
  ASSERT_TRUE(b.yes);
  EXPECT_EQ(b.witness->c.dim(), 1u);
  EXPECT_TRUE(b.witness->s.is_zero());
  EXPECT_EQ(b.witness->j, span(2, {1}));
  EXPECT_TRUE(check_frattini_witness(build("borel2"), *b.witness).empty());

  FrattiniVerdict h = frattini_free(build("heisenberg3"));
  EXPECT_FALSE(h.yes);
  bool saw3 = false;
  for (const auto& v : h.violations)
    if (v.id == 3) {
      saw3 = true;
      EXPECT_EQ(v.offending, span(3, {2}));
    }
  EXPECT_TRUE(saw3);

  FrattiniVerdict c = frattini_free(build("cext4"));
  EXPECT_FALSE(c.yes);
  std::vector<int> ids;
  for (const auto& v : c.violations) {
    ids.push_back(v.id);
    EXPECT_EQ(v.offending, span(4, {2}));
  }
  EXPECT_EQ(ids, (std::vector<int>{2, 3}));

  LieAlgebra c2 = build("classII", {2});
  FrattiniVerdict w = frattini_free(c2);
  ASSERT_TRUE(w.yes);
  EXPECT_TRUE(w.witness->c.is_zero());
  EXPECT_EQ(w.witness->s.dim(), 3u);
  EXPECT_EQ(w.witness->j, span(5, {3, 4}));
  EXPECT_EQ(w.witness->blocks.size(), 1u);
}

TEST(FrattiniFree, WitnessWithCommutingPartAndWeights) {
  // abelian(2) acting diagonally on C^3 with weights (1, i), (0, 1), (2, 0)
  Matrix d1(3, 3), d2(3, 3);
  d1(0, 0) = 1;
  d1(2, 2) = 2;
  d2(0, 0) = Scalar::i();
  d2(1, 1) = 1;
  LieAlgebra l = semidirect_product(abelian_algebra(2), abelian_algebra(3), {d1, d2});
  FrattiniVerdict v = frattini_free(l);
  ASSERT_TRUE(v.yes);
  EXPECT_EQ(v.witness->c.dim(), 2u);
  EXPECT_EQ(v.witness->blocks.size(), 3u);
  EXPECT_TRUE(check_frattini_witness(l, *v.witness).empty());
  EXPECT_TRUE(frattini_ideal(l).is_zero());
}

TEST(FrattiniFree, AgreesWithFrattiniIdeal) {
  for (const auto& l : {build("gl", {3}), build("t", {3}), build("classI"), build("n", {4}),
                        direct_product({build("borel2"), abelian_algebra(1)})})
    EXPECT_EQ(frattini_free(l).yes, frattini_ideal(l).is_zero()) << l.name();
}

TEST(JacobsonFree, Examples) {
  LieAlgebra gl2 = build("gl", {2});
  JacobsonVerdict v = jacobson_free(gl2);
  ASSERT_TRUE(v.yes);
  EXPECT_EQ(v.semisimple_part.dim(), 3u);
  EXPECT_EQ(v.central_part, centre(gl2));
  JacobsonVerdict b = jacobson_free(build("borel2"));
  EXPECT_FALSE(b.yes);
  EXPECT_EQ(b.jacobson, span(2, {1}));
  EXPECT_TRUE(jacobson_free(abelian_algebra(3)).yes);
}

TEST(Subsimple, Examples) {
  EXPECT_EQ(subsimple(build("heisenberg3")).cls, SubsimpleClass::not_subsimple);
  EXPECT_EQ(subsimple(build("borel2")).cls, SubsimpleClass::classII);
  EXPECT_EQ(subsimple(build("sl", {2})).cls, SubsimpleClass::simple);
  SubsimpleVerdict c1 = subsimple(build("classI"));
  EXPECT_EQ(c1.cls, SubsimpleClass::classI);
  EXPECT_FALSE(c1.heuristic_isomorphism);
  EXPECT_EQ(subsimple(build("classII", {2})).cls, SubsimpleClass::classII);
  EXPECT_EQ(subsimple(build("classII", {3})).cls, SubsimpleClass::classII);
  EXPECT_EQ(subsimple(abelian_algebra(1)).cls, SubsimpleClass::dim1);
  EXPECT_EQ(subsimple(abelian_algebra(2)).cls, SubsimpleClass::not_subsimple);
  EXPECT_EQ(subsimple(direct_product({build("sl", {3}), build("sl", {2})})).cls, SubsimpleClass::not_subsimple);
  EXPECT_EQ(subsimple(build("gl", {2})).cls, SubsimpleClass::not_subsimple);
}

TEST(DirectSummands, Examples) {
  IdealSplit a = direct_summands(direct_product({build("sl", {2}), build("heisenberg3")}));
  EXPECT_EQ(dims(a.parts), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(direct_summands(build("classII", {2})).parts.size(), 1u);
  IdealSplit ab = direct_summands(abelian_algebra(2));
  EXPECT_EQ(dims(ab.parts), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(dims(direct_summands(build("gl", {2})).parts), (std::vector<std::size_t>{1, 3}));
}

TEST(SubmaximalFamily, Examples) {
  auto b = submaximal_witness_family(build("borel2"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(b[0].is_zero());

  LieAlgebra c1 = build("classI");
  auto f = submaximal_witness_family(c1);
  ASSERT_EQ(f.size(), 2u);
  for (const auto& j : f) {
    EXPECT_EQ(j.dim(), 3u);
    EXPECT_EQ(subsimple(quotient(c1, j).algebra).cls, SubsimpleClass::simple);
  }

  LieAlgebra ba = direct_product({build("borel2"), abelian_algebra(1)});
  auto g = submaximal_witness_family(ba);
  ASSERT_EQ(g.size(), 2u);
  std::vector<std::string> classes;
  for (const auto& j : g) classes.push_back(to_string(subsimple(quotient(ba, j).algebra).cls));
  std::sort(classes.begin(), classes.end());
  EXPECT_EQ(classes, (std::vector<std::string>{"classII", "dim1"}));
  EXPECT_TRUE(intersect(g[0], g[1]).is_zero());

  EXPECT_THROW(submaximal_witness_family(build("heisenberg3")), NotFrattiniFree);
}

TEST(SubdirectProduct, Examples) {
  LieAlgebra p = build("classI");
  std::vector<Vector> diag;
  for (std::size_t k = 0; k < 3; ++k) diag.push_back(unit_vector(6, k) + unit_vector(6, k + 3));
  Subspace m = Subspace::span(diag, 6);
  EXPECT_TRUE(is_subalgebra(p, m));
  EXPECT_TRUE(is_subdirect_product(m, {3, 3}));
  EXPECT_FALSE(is_subdirect_product(span(6, {0, 1, 2}), {3, 3}));
  EXPECT_TRUE(is_subdirect_product(whole(p), {3, 3}));
}

TEST(DecomposableRep, Examples) {
  Matrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  RepVerdict a = decomposable_rep({d}, 2);
  EXPECT_EQ(a.answer, RepAnswer::yes);
  EXPECT_EQ(a.blocks.size(), 2u);
  EXPECT_TRUE(std::find(a.blocks.begin(), a.blocks.end(), span(2, {0})) != a.blocks.end());

  Matrix j(3, 3);
  j(0, 1) = j(1, 2) = 1;
  RepVerdict b = decomposable_rep({j}, 3);
  EXPECT_EQ(b.answer, RepAnswer::no);
  EXPECT_FALSE(b.radical.empty());

  LieAlgebra c2 = build("classII", {2});
  RepVerdict c = decomposable_rep(adjoint_action_on(c2, span(5, {3, 4})), 2);
  EXPECT_EQ(c.answer, RepAnswer::yes);
  EXPECT_EQ(c.blocks.size(), 1u);
}

TEST(DecomposableRep, ReductiveOperatorAlgebras) {
  for (const auto& l : {build("gl", {2}), build("gl", {3}), direct_product({build("sl", {2}), abelian_algebra(2)})}) {
    if (decomposable_rep(adjoint_operators(l), l.dim()).answer == RepAnswer::no) continue;
    Subspace d = bracket_spaces(l, whole(l), whole(l));
    EXPECT_TRUE(killing_nondegenerate(induced_algebra(l, d).algebra));
    EXPECT_TRUE(sum(d, centre(l)).is_whole());
    EXPECT_TRUE(intersect(d, centre(l)).is_zero());
  }
}
