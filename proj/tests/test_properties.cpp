#include "properties.hpp"

#include <gtest/gtest.h>

namespace qflag::props {
namespace {

void expect_suite(const SuiteResult &s) {
  EXPECT_GE(s.cases, 100) << s.name;
  EXPECT_EQ(s.failures, 0) << s.name << ": " << s.first_failure;
}

TEST(Properties, BraidRelations) { expect_suite(braid_relations(120, 11)); }
TEST(Properties, CoproductMultiplicative) { expect_suite(coproduct_multiplicative(120, 12)); }
TEST(Properties, HopfPairing) { expect_suite(hopf_pairing(120, 13)); }
TEST(Properties, ClassInvariance) { expect_suite(class_invariance(120, 14)); }
TEST(Properties, OppositeDuality) { expect_suite(opposite_duality(120, 15)); }
TEST(Properties, HilbertOrderInvariance) { expect_suite(hilbert_order_invariance(120, 16)); }

}  // namespace
}  // namespace qflag::props
