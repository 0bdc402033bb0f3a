#include "qflag/uqsl.hpp"

#include <gtest/gtest.h>

namespace qflag {
namespace {

const RatQ q = RatQ::q_pow(1);

TEST(Uq, CommutationRelations) {
  Uq u(2);
  UqElement kk = (u.K(1) - u.K(1, -1)).scaled(RatQ::nu().inverse());
  EXPECT_EQ(u.mul(u.E(1), u.F(1)) - u.mul(u.F(1), u.E(1)), kk);
  EXPECT_TRUE((u.mul(u.E(1), u.F(2)) - u.mul(u.F(2), u.E(1))).is_zero());
  EXPECT_EQ(u.mul(u.K(1), u.E(1)), u.mul(u.E(1), u.K(1)).scaled(q * q));
  EXPECT_EQ(u.mul(u.K(1), u.E(2)), u.mul(u.E(2), u.K(1)).scaled(q.inverse()));
  EXPECT_TRUE(u.mul(u.K(1), u.K(1, -1)).is_scalar());
}

TEST(Uq, SerreRelationsVanish) {
  Uq u(3);
  UqElement s = parse_uq(u, "E1E1E2 - (q + q^-1) E1E2E1 + E2E1E1");
  EXPECT_TRUE(s.is_zero());
  EXPECT_TRUE(parse_uq(u, "F3F3F2 - (q + q^-1) F3F2F3 + F2F3F3").is_zero());
  EXPECT_TRUE(parse_uq(u, "E1E3 - E3E1").is_zero());
}

TEST(Uq, HopfStructureOnGenerators) {
  Uq u(2);
  EXPECT_EQ(u.coproduct(u.E(1)), u.tensor(u.E(1), u.K(1)) + u.tensor(u.one(), u.E(1)));
  EXPECT_EQ(u.coproduct(u.F(1)), u.tensor(u.F(1), u.one()) + u.tensor(u.K(1, -1), u.F(1)));
  EXPECT_EQ(u.coproduct(u.K(2)), u.tensor(u.K(2), u.K(2)));
  EXPECT_TRUE(u.counit(u.E(1)).is_zero());
  EXPECT_TRUE(u.counit(u.K(1)).is_one());
}

TEST(Uq, NiceRootVectorsRankTwo) {
  Uq u(2);
  auto rv = u.root_vectors(nice_word(2));
  ASSERT_EQ(rv.size(), 3u);
  EXPECT_EQ(rv[0], u.E(2));
  EXPECT_EQ(rv[1], parse_uq(u, "[E2,E1]_{q^-1}"));
  EXPECT_EQ(rv[2], u.E(1));
  EXPECT_EQ(u.build_Eji(1, 3), rv[1]);
  EXPECT_THROW(u.root_vectors({1, 2}), Error);
}

TEST(Uq, BraidActionOnGenerators) {
  Uq u(2);
  EXPECT_EQ(u.braid_T(1, u.E(1)), u.mul(u.F(1), u.K(1)).scaled(RatQ(-1)));
  EXPECT_EQ(u.braid_T(1, u.K(1)), u.K(1, -1));
  EXPECT_EQ(u.braid_T(2, u.braid_T(1, u.E(2))), u.E(1));
}

TEST(Uq, ParserGrammar) {
  Uq u(2);
  std::map<std::string, RatQ> vars = {{"t", RatQ(2)}};
  EXPECT_EQ(parse_uq(u, "[E2,E1]_{t}", vars), u.mul(u.E(2), u.E(1)) - u.mul(u.E(1), u.E(2)).scaled(RatQ(2)));
  EXPECT_EQ(parse_uq(u, "E1^2"), u.mul(u.E(1), u.E(1)));
  EXPECT_EQ(parse_uq(u, "K1^-1"), u.K(1, -1));
  EXPECT_EQ(parse_uq(u, "nu*E1"), u.E(1).scaled(RatQ::nu()));
  EXPECT_EQ(parse_uq(u, "E1/q"), u.E(1).scaled(q.inverse()));
  EXPECT_THROW(parse_uq(u, "E3"), Error);
  EXPECT_THROW(parse_uq(u, "[E1,E2"), Error);
  EXPECT_THROW(parse_uq(u, "t E1"), Error);
}

TEST(Uq, RenderIsParseable) {
  Uq u(2);
  UqElement x = parse_uq(u, "(q - 1) F1K2E1E2 - q^-1 E2E1 + 3");
  EXPECT_EQ(parse_uq(u, u.render(x)), x);
}

TEST(Uq, WeightAndAdjoint) {
  Uq u(2);
  EXPECT_EQ(u.weight(parse_uq(u, "E1E2F1")), (std::vector<int>{0, 1}));
  EXPECT_THROW(u.weight(parse_uq(u, "E1 + E2")), Error);
  // Right adjoint of E_j on E_i is a q-commutator.
  EXPECT_EQ(u.adjoint({'E', 2, 1}, u.E(1)), parse_uq(u, "[E1,E2]_{q}"));
  EXPECT_EQ(u.adjoint({'K', 1, 1}, u.E(2)), u.E(2).scaled(q));
}

}  // namespace
}  // namespace qflag
