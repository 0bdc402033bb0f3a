#include "qflag/oq.hpp"

#include <gtest/gtest.h>

namespace qflag {
namespace {

const RatQ q = RatQ::q_pow(1);

TEST(Oq, PairingWithGenerators) {
  Uq u(2);
  VectorRep rep(u);
  EXPECT_TRUE(rep.pair(u.E(1), parse_oq_word("u[2,1]", 2)).is_one());
  EXPECT_TRUE(rep.pair(u.F(1), parse_oq_word("u[1,2]", 2)).is_one());
  // E_1 maps the first basis vector to the second, so K_1 has eigenvalue q^-1 on it.
  EXPECT_EQ(rep.pair(u.K(1), parse_oq_word("u[1,1]", 2)), q.inverse());
  EXPECT_EQ(rep.pair(u.K(1), parse_oq_word("u[2,2]", 2)), q);
  EXPECT_TRUE(rep.pair(u.K(1), parse_oq_word("u[1,1]u[2,2]", 2)).is_one());
  EXPECT_TRUE(rep.pair(u.E(1), parse_oq_word("1", 2)).is_zero());
}

TEST(Oq, FrtRelationsHoldInTheDual) {
  Uq u(2);
  VectorRep rep(u);
  auto W = [](const char *s) { return OqElement::word(parse_oq_word(s, 2)); };
  EXPECT_TRUE(rep.oq_equal(W("u[1,1]u[1,2]"), W("u[1,2]u[1,1]").scaled(q), 2));
  EXPECT_FALSE(rep.oq_equal(W("u[1,1]u[1,2]"), W("u[1,2]u[1,1]"), 2));
  EXPECT_TRUE(rep.oq_equal(W("u[1,2]u[2,1]"), W("u[2,1]u[1,2]"), 2));
}

TEST(Oq, ImageSpanDimensions) {
  Uq u1(1);
  VectorRep r1(u1);
  EXPECT_EQ(r1.image_span(2).size(), 10u);
  Uq u2(2);
  VectorRep r2(u2);
  EXPECT_EQ(r2.image_span(2).size(), 45u);
}

TEST(Oq, WordParsingAndEnumeration) {
  EXPECT_EQ(parse_oq_word("u[1,2]u[2,1]", 1), (OqWord{{1, 2}, {2, 1}}));
  EXPECT_TRUE(parse_oq_word("1", 1).empty());
  EXPECT_THROW(parse_oq_word("u[1,3]", 1), Error);
  EXPECT_THROW(parse_oq_word("u[1,2", 1), Error);
  EXPECT_EQ(oq_word_str({{1, 2}, {2, 2}}), "u[1,2]u[2,2]");
  EXPECT_EQ(all_oq_words(2, 2).size(), 81u);
}

TEST(Oq, LeftActionMatchesPairing) {
  Uq u(1);
  VectorRep rep(u);
  // E |> u_{a b} = sum_c u_{a c} <E, u_{c b}>.
  OqElement e = rep.left_act(u.E(1), OqElement::word({{1, 1}}));
  EXPECT_EQ(e, OqElement::word({{1, 2}}));
  EXPECT_TRUE(rep.left_act(u.E(1), OqElement::word({{1, 2}})).is_zero());
}

TEST(Oq, ActionKernelSl2) {
  Uq u(1);
  VectorRep rep(u);
  auto ker = rep.action_kernel(all_oq_words(1, 1), {u.E(1)});
  ASSERT_EQ(ker.size(), 2u);
  for (const auto &k : ker)
    for (const auto &[w, c] : k.terms()) EXPECT_EQ(w.front().second, 2);
}

TEST(Oq, MixedLengthsRejected) {
  OqElement e = OqElement::word({{1, 1}}) + OqElement::word({});
  EXPECT_THROW(e.length(), Error);
}

}  // namespace
}  // namespace qflag
