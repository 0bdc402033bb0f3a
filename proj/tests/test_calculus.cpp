#include "qflag/calculus.hpp"

#include <gtest/gtest.h>

namespace qflag {
namespace {

TEST(Calculus, TangentFromNiceWord) {
  Uq u(3);
  TangentSpace t = tangent_from_word(u, nice_word(3));
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_EQ(t.labels, (std::vector<std::string>{"e43", "e42", "e41", "e32", "e31", "e21"}));
  EXPECT_EQ(t.letter_of(Root{1, 4}), 2);
  EXPECT_THROW(tangent_from_word(u, {1, 2, 3}), Error);
}

TEST(Calculus, TangentFromExpressionsValidates) {
  Uq u(2);
  EXPECT_THROW(tangent_from_exprs(u, {"E1", "q E1"}), Error);
  EXPECT_THROW(tangent_from_exprs(u, {"E1", "F1"}), Error);
  EXPECT_THROW(tangent_from_exprs(u, {"E1 + 1"}), Error);
  EXPECT_THROW(tangent_from_exprs(u, {"0 E1"}), Error);
  TangentSpace t = tangent_from_exprs(u, {"E1", "E1E1"});
  EXPECT_EQ(t.labels, (std::vector<std::string>{"e21", "x2"}));
}

TEST(Calculus, RankTwoVerdictsAndRelations) {
  Uq u(2);
  for (const char *w : {"212", "121"}) {
    TangentSpace t = tangent_from_word(u, parse_word(w, 2));
    EXPECT_EQ(coideal_check(u, t).verdict, Verdict::two_sided) << w;
    EXPECT_EQ(quadratic_relations(u, t).size(), 6u) << w;
  }
}

TEST(Calculus, CoidealWitnessForNonTangentSpace) {
  Uq u(2);
  TangentSpace t = tangent_from_exprs(u, {"E1", "E2"});
  CoidealReport r = coideal_check(u, t);
  EXPECT_EQ(r.verdict, Verdict::two_sided);
  TangentSpace bad = tangent_from_exprs(u, {"E1E2"});
  CoidealReport rb = coideal_check(u, bad);
  EXPECT_EQ(rb.verdict, Verdict::neither);
  EXPECT_FALSE(rb.witnesses.empty());
}

TEST(Calculus, VerdictNames) {
  for (Verdict v : {Verdict::two_sided, Verdict::left_only, Verdict::right_only, Verdict::neither})
    EXPECT_EQ(parse_verdict(verdict_str(v)), v);
  EXPECT_THROW(parse_verdict("both"), Error);
}

TEST(Calculus, RankTwoRelationsContainQCommutators) {
  Uq u(2);
  TangentSpace t = tangent_from_word(u, nice_word(2));
  auto rel = quadratic_relations(u, t).all();
  auto L = [&](int j, int i) { return static_cast<std::uint8_t>(t.letter_of(Root{i, j})); };
  const RatQ q = RatQ::q_pow(1);
  EXPECT_TRUE(span_contains(rel, FreeElement::word({L(2, 1), L(3, 2)}) + FreeElement::word({L(3, 2), L(2, 1)}, q.inverse())));
  EXPECT_TRUE(span_contains(rel, FreeElement::word({L(2, 1), L(3, 1)}) + FreeElement::word({L(3, 1), L(2, 1)}, q)));
  EXPECT_TRUE(span_contains(rel, FreeElement::word({L(3, 1), L(3, 1)})));
}

TEST(Calculus, ProductKernelDimensionsSumToRelationCount) {
  Uq u(3);
  TangentSpace t = tangent_from_word(u, nice_word(3));
  auto rel = quadratic_relations(u, t);
  std::size_t c = 0;
  for (const auto &[wt, d] : product_kernel_dims(u, t)) {
    (void)wt;
    c += d;
  }
  // Each weight block of T (x) T splits into C_mu and its annihilator.
  EXPECT_EQ(c + rel.size(), t.dim() * t.dim());
}

TEST(Calculus, ExteriorDimsClassicalFlag) {
  Uq u(2);
  TangentSpace t = tangent_from_word(u, nice_word(2));
  auto rel = quadratic_relations(u, t);
  auto d = exterior_dims(t, rel, 4);
  EXPECT_EQ(d.dims, (std::vector<std::uint64_t>{1, 3, 3, 1, 0}));
  EXPECT_TRUE(d.classical);
  // Not classical when the table stops before degree d+1.
  EXPECT_FALSE(exterior_dims(t, rel, 2).classical);
}

TEST(Calculus, BruteForceDegreeThreeMatchesCompletion) {
  // dim of degree-3 part = 27 - dim(I^(2) (x) T + T (x) I^(2)).
  Uq u(2);
  TangentSpace t = tangent_from_word(u, nice_word(2));
  auto rel = quadratic_relations(u, t).all();
  std::vector<FreeElement> gens;
  for (const auto &r : rel)
    for (std::uint8_t a = 0; a < 3; ++a) {
      gens.push_back(FreeElement::word({a}) * r);
      gens.push_back(r * FreeElement::word({a}));
    }
  std::vector<FreeElement> basis;
  for (const auto &g : gens)
    if (!span_contains(basis, g)) basis.push_back(g);
  EXPECT_EQ(27 - basis.size(), exterior_dims(t, quadratic_relations(u, t), 3).dims[3]);
}

TEST(Calculus, GrassmannRestrictionAllRoots) {
  Uq u(3);
  TangentSpace t = tangent_from_word(u, nice_word(3));
  const std::size_t sizes[] = {3, 4, 3};
  for (int r = 1; r <= 3; ++r) {
    GrassmannReport g = grassmann_restriction(u, t, r);
    EXPECT_EQ(g.restricted.dim(), sizes[r - 1]);
    EXPECT_TRUE(g.closed) << g.failure;
  }
  EXPECT_THROW(grassmann_restriction(u, t, 4), Error);
}

TEST(Calculus, LineDecompositionNeedsClassicalTable) {
  Uq u(2);
  TangentSpace t = tangent_from_word(u, nice_word(2));
  auto rel = quadratic_relations(u, t);
  EXPECT_THROW(line_decomposition(t, exterior_dims(t, rel, 2), 1), Error);
  EXPECT_EQ(line_decomposition(t, exterior_dims(t, rel, 4), 0), (std::vector<std::vector<int>>{{0, 0}}));
}

TEST(Calculus, CotangentRepresentativesAreDual) {
  Uq u(2);
  VectorRep rep(u);
  TangentSpace t = tangent_from_word(u, nice_word(2));
  auto reps = cotangent_representatives(rep, t);
  ASSERT_EQ(reps.size(), t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b)
      EXPECT_EQ(rep.pair(t.basis[a], reps[b]), a == b ? RatQ(1) : RatQ(0));
}

TEST(Calculus, DbarKernelDegreeTwo) {
  Uq u(1);
  VectorRep rep(u);
  TangentSpace t = tangent_from_word(u, nice_word(1));
  // u_{a2} u_{c2} span three dimensions; the quantum determinant adds the unit.
  auto ker = dbar_kernel(rep, all_oq_words(1, 2), t);
  EXPECT_EQ(ker.size(), 4u);
}

}  // namespace
}  // namespace qflag
