#include <gtest/gtest.h>

#include <set>

#include "hompre/dendriform.hpp"
#include "hompre/fixtures.hpp"
#include "hompre/sweep.hpp"

using namespace hompre;
using namespace hompre::fixtures;

TEST(Lcg, FirstDraws) {
  Lcg g(0);
  EXPECT_EQ(g.next(), 1442695040888963407ULL);
  EXPECT_EQ(g.next(), 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
}

TEST(Lcg, BelowStaysInRange) {
  Lcg g(42);
  std::set<std::size_t> seen;
  for (int i = 0; i < 200; ++i) {
    const auto v = g.below(5);
    ASSERT_LT(v, 5u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(DeriveSeed, DistinctPerIndex) {
  std::set<std::uint64_t> s;
  for (std::uint64_t i = 0; i < 1000; ++i) s.insert(derive_seed(1, i));
  EXPECT_EQ(s.size(), 1000u);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Corpus, Sizes) {
  EXPECT_EQ(small_corpus(LinearMap::identity(2)).size(), 173u);
  const auto flipped = small_corpus(LinearMap::diagonal({-1, 1}));
  EXPECT_FALSE(flipped.empty());
  for (const auto& a : flipped) EXPECT_TRUE(validate_hom_pre_lie(a).valid());
}

TEST(Candidates, Deterministic) {
  EXPECT_EQ(pre_lie_pair_candidate(9).lA, pre_lie_pair_candidate(9).lA);
  EXPECT_EQ(lie_pair_candidate(9).rho, lie_pair_candidate(9).rho);
  const auto c = operator_candidate(11);
  EXPECT_EQ(c.T, operator_candidate(11).T);
  EXPECT_TRUE(validate_pre_lie_rep(c.rep).valid());
  EXPECT_EQ(c.T * c.rep.beta, c.rep.algebra.twist * c.T);
}

TEST(Candidates, DualProductTwist) {
  const auto a = F1();
  for (std::uint64_t s = 0; s < 20; ++s)
    EXPECT_EQ(dual_product_candidate(a, s).twist, a.twist.inverse().transpose());
}

TEST(Sweep, DoubleLie) {
  const auto s = sweep_double_lie({1, 200, 2});
  EXPECT_TRUE(s.all_agree()) << s.summary();
  EXPECT_GT(s.both_hold, 0u);
  EXPECT_GT(s.both_fail, 0u);
}

TEST(Sweep, DoublePreLie) {
  const auto s = sweep_double_pre_lie({1, 200, 2});
  EXPECT_TRUE(s.all_agree()) << s.summary();
  EXPECT_GT(s.both_hold, 0u);
  EXPECT_GT(s.both_fail, 0u);
}

TEST(Sweep, MatchedEquiv) {
  const auto s = sweep_matched_equiv({3, 150, 2});
  EXPECT_TRUE(s.all_agree()) << s.summary();
  EXPECT_GT(s.both_hold, 0u);
  EXPECT_GT(s.both_fail, 0u);
}

TEST(Sweep, EquivalenceOnF2) {
  const auto s = sweep_equivalence(F2(), {5, 100, 2});
  EXPECT_TRUE(s.all_agree()) << s.summary();
  EXPECT_GT(s.both_hold, 0u);
}

TEST(Sweep, Semidirect) {
  const auto s = sweep_semidirect({1, 100, 2});
  EXPECT_TRUE(s.all_agree()) << s.summary();
  EXPECT_GT(s.both_hold, 0u);
  EXPECT_GT(s.both_fail, 0u);
}

TEST(Sweep, WorkerCountDoesNotChangeResult) {
  const auto a = sweep_double_pre_lie({4, 60, 1});
  const auto b = sweep_double_pre_lie({4, 60, 4});
  EXPECT_EQ(a.summary(), b.summary());
  EXPECT_EQ(a.disagreement_indices, b.disagreement_indices);
}
