#include "qflag/freealg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qflag {
namespace {

Alphabet two_letters() { return Alphabet({"x", "y"}, {{1, 0}, {0, 1}}); }

FreeElement w(std::initializer_list<std::uint8_t> l, RatQ c = RatQ(1)) { return FreeElement::word(Word(l), c); }

TEST(FreeAlg, ArithmeticAndRender) {
  Alphabet a = two_letters();
  FreeElement e = w({0, 1}) - w({1, 0}, RatQ::q_pow(1));
  EXPECT_EQ(e.render(a), "xy - q*yx");
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ((w({0}) * w({1})), w({0, 1}));
  EXPECT_EQ(e.max_degree(), 2);
}

TEST(FreeAlg, QuantumPlaneHasPolynomialHilbertFunction) {
  Alphabet a = two_letters();
  auto d = graded_dims({w({1, 0}) - w({0, 1}, RatQ::q_pow(1))}, a, MonomialOrder::natural(2), 5);
  EXPECT_EQ(d, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}));
}

TEST(FreeAlg, QuantumExteriorPlane) {
  Alphabet a = two_letters();
  std::vector<FreeElement> rel = {w({0, 0}), w({1, 1}), w({0, 1}) + w({1, 0}, RatQ::q_pow(1))};
  EXPECT_EQ(graded_dims(rel, a, MonomialOrder::natural(2), 3), (std::vector<std::uint64_t>{1, 2, 1, 0}));
  EXPECT_EQ(graded_dims(rel, a, MonomialOrder::reversed(2), 3), (std::vector<std::uint64_t>{1, 2, 1, 0}));
}

TEST(FreeAlg, CompletionAddsOverlapRules) {
  // Serre relations of sl3: PBW generators in degrees 1, 1, 2 give 1/((1-t)^2 (1-t^2)).
  Alphabet a = two_letters();
  RatQ c = RatQ::qint2();
  std::vector<FreeElement> serre = {w({0, 0, 1}) - w({0, 1, 0}, c) + w({1, 0, 0}),
                                    w({1, 1, 0}) - w({1, 0, 1}, c) + w({0, 1, 1})};
  EXPECT_EQ(graded_dims(serre, a, MonomialOrder::natural(2), 6), (std::vector<std::uint64_t>{1, 2, 4, 6, 9, 12, 16}));
}

TEST(FreeAlg, ReductionIsConfluent) {
  Alphabet a = two_letters();
  RatQ c = RatQ::qint2();
  std::vector<FreeElement> serre = {w({0, 0, 1}) - w({0, 1, 0}, c) + w({1, 0, 0}),
                                    w({1, 1, 0}) - w({1, 0, 1}, c) + w({0, 1, 1})};
  TruncatedGB gb = complete_truncated(serre, a, MonomialOrder::natural(2), 6);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Word word;
    for (int l = 0; l < 6; ++l) word.push_back(static_cast<std::uint8_t>(rng() % 2));
    FreeElement e = FreeElement::word(word);
    EXPECT_EQ(nf_reduce(e, gb), nf_reduce_random(e, gb, rng));
  }
}

TEST(FreeAlg, ResourceLimitIsReported) {
  Alphabet a = two_letters();
  RatQ c = RatQ::qint2();
  std::vector<FreeElement> serre = {w({0, 0, 1}) - w({0, 1, 0}, c) + w({1, 0, 0}),
                                    w({1, 1, 0}) - w({1, 0, 1}, c) + w({0, 1, 1})};
  EXPECT_THROW(graded_dims(serre, a, MonomialOrder::natural(2), 8, {1, 1}), ResourceLimit);
}

TEST(FreeAlg, RejectsInhomogeneousRelations) {
  Alphabet a = two_letters();
  EXPECT_THROW(graded_dims({w({0, 1}) + w({0})}, a, MonomialOrder::natural(2), 3), Error);
}

TEST(FreeAlg, SpanHelpers) {
  std::vector<FreeElement> b = {w({0, 1}) + w({1, 0}), w({0, 0})};
  EXPECT_TRUE(span_contains(b, w({0, 1}, RatQ(2)) + w({1, 0}, RatQ(2)) - w({0, 0})));
  EXPECT_FALSE(span_contains(b, w({0, 1})));
  EXPECT_TRUE(span_equal(b, {w({0, 0}, RatQ::nu()), w({1, 0}) + w({0, 1}) + w({0, 0})}));
  EXPECT_FALSE(span_equal(b, {w({0, 0})}));
}

}  // namespace
}  // namespace qflag
