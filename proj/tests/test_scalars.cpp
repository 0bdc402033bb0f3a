#include "qflag/linalg.hpp"
#include "qflag/ratq.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qflag {
namespace {

const RatQ q = RatQ::q_pow(1);

TEST(RatQ, UnitsAndInverses) {
  EXPECT_TRUE((q * q.inverse()).is_one());
  EXPECT_EQ(RatQ::nu(), q - q.inverse());
  EXPECT_EQ(RatQ::qint2(), q + q.inverse());
  EXPECT_EQ(RatQ::nu() * RatQ::qint2(), q * q - RatQ::q_pow(-2));
  EXPECT_TRUE(RatQ().is_zero());
  EXPECT_THROW(RatQ().inverse(), Error);
}

TEST(RatQ, CanonicalFormMakesEqualityStructural) {
  RatQ a = (q * q - RatQ(1)) / (q - RatQ(1));
  EXPECT_EQ(a, q + RatQ(1));
  RatQ b = RatQ(2) * q / (RatQ(4) * q * q);
  EXPECT_EQ(b, RatQ(mpq_class(1, 2)) * RatQ::q_pow(-1));
  EXPECT_EQ((q - RatQ(1)) / (RatQ(1) - q), RatQ(-1));
}

TEST(RatQ, ParseAndRender) {
  for (const char *s : {"q", "q^-1", "-q^2", "nu", "(q - q^-1)^2", "1/(q+1)", "3/4", "q^{-3}"}) {
    RatQ x = RatQ::parse(s);
    EXPECT_EQ(RatQ::parse(x.str()), x) << s << " -> " << x.str();
  }
  EXPECT_EQ(RatQ::parse("nu"), RatQ::nu());
  EXPECT_EQ(RatQ::parse("q^-1"), q.inverse());
  EXPECT_EQ(RatQ(1).str(), "1");
  EXPECT_EQ(q.str(), "q");
  EXPECT_THROW(RatQ::parse("q +"), Error);
  EXPECT_THROW(RatQ::parse("1/0"), Error);
  EXPECT_THROW(RatQ::parse("x"), Error);
}

TEST(RatQ, RenderTermParenthesizesSums) {
  EXPECT_EQ(render_term(RatQ(1), "E1", true), "E1");
  EXPECT_EQ(render_term(RatQ(-1), "E1", false), " - E1");
  EXPECT_EQ(render_term(q, "E1", false), " + q*E1");
  std::string s = render_term(q - RatQ(1), "E1", true);
  EXPECT_EQ(s.front(), '(');
}

TEST(RatQ, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4), e(-3, 3);
  const mpq_class at(3, 2);
  for (int k = 0; k < 200; ++k) {
    RatQ a = RatQ(c(rng)) * RatQ::q_pow(e(rng)) + RatQ(c(rng));
    RatQ b = RatQ(c(rng)) * RatQ::q_pow(e(rng)) + RatQ(c(rng) | 1);
    EXPECT_EQ((a * b).eval(at), a.eval(at) * b.eval(at));
    EXPECT_EQ((a + b).eval(at), a.eval(at) + b.eval(at));
    if (!b.is_zero() && b.eval(at) != 0) EXPECT_EQ((a / b).eval(at), a.eval(at) / b.eval(at));
  }
}

TEST(Linalg, EchelonRankAndMembership) {
  Echelon e;
  EXPECT_TRUE(e.insert({{0, RatQ(1)}, {1, q}}));
  EXPECT_TRUE(e.insert({{1, RatQ(1)}, {2, RatQ(1)}}));
  EXPECT_FALSE(e.insert({{0, RatQ(1)}, {1, q + RatQ(1)}, {2, RatQ(1)}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({{0, q}, {1, q * q}}));
  EXPECT_FALSE(e.contains({{2, RatQ(1)}}));
}

TEST(Linalg, KernelAndAnnihilator) {
  std::vector<SparseVec> vs = {{{0, RatQ(1)}}, {{0, q}}, {{1, RatQ(1)}}};
  auto k = kernel(vs);
  ASSERT_EQ(k.size(), 1u);
  // q * v0 - v1 = 0.
  RatQ ratio = k[0][0].second / k[0][1].second;
  EXPECT_EQ(ratio, -q);
  auto ann = annihilator({{{0, RatQ(1)}, {1, q}}}, 3);
  EXPECT_EQ(ann.size(), 2u);
  for (const auto &a : ann) {
    RatQ dot;
    for (const auto &[c, v] : a) {
      if (c == 0) dot += v;
      if (c == 1) dot += v * q;
    }
    EXPECT_TRUE(dot.is_zero());
  }
}

}  // namespace
}  // namespace qflag
