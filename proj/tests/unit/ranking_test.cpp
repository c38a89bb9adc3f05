//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/rank/ranking.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "test_common.h"

namespace synthroute::rank {
namespace {

const CriteriaWeights kCaseStudy { 0.1, 0.3, 0.6 };

std::vector<SequenceCriteria> random_instance(std::mt19937_64 &rng, int n) {
  std::uniform_int_distribution<int> steps(1, 8);
  std::uniform_real_distribution<double> yield(0.01, 1.0);
  std::uniform_real_distribution<double> hours(0.0, 120.0);
  std::vector<SequenceCriteria> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({ static_cast<std::uint64_t>(i + 1), steps(rng), yield(rng),
                    hours(rng) });
  }
  return out;
}

CriteriaWeights random_weights(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng);
  double b = u(rng);
  if (a > b) {
    std::swap(a, b);
  }
  return { a, b - a, 1.0 - b };
}

std::vector<std::uint64_t> order_of(const std::vector<RankEntry> &entries) {
  std::vector<std::uint64_t> ids;
  for (const RankEntry &e: entries) {
    ids.push_back(e.raw.leaf);
  }
  return ids;
}

TEST(NormalizeTest, TwoPointMinMax) {
  const std::vector<SequenceCriteria> seqs { { 1, 2, 0.5, 3 },
                                             { 2, 2, 0.72, 3 } };
  const auto n = normalize_criteria(seqs);
  EXPECT_DOUBLE_EQ(n[0].yield, 0.0);
  EXPECT_DOUBLE_EQ(n[1].yield, 1.0);
  EXPECT_DOUBLE_EQ(n[0].duration, 0.5);
  EXPECT_DOUBLE_EQ(n[1].duration, 0.5);
  EXPECT_DOUBLE_EQ(n[0].steps, 0.5);
}

TEST(NormalizeTest, EmptyInput) {
  EXPECT_SR_ERROR(normalize_criteria({}), ErrorCode::kEmptyInput);
}

TEST(NormalizeTest, RandomValuesInRangeWithExtremes) {
  std::mt19937_64 rng(5);
  const auto seqs = random_instance(rng, 20);
  const auto n = normalize_criteria(seqs);
  for (auto field: { &NormalizedCriteria::steps, &NormalizedCriteria::yield,
                     &NormalizedCriteria::duration }) {
    double lo = 1.0;
    double hi = 0.0;
    for (const auto &v: n) {
      EXPECT_GE(v.*field, 0.0);
      EXPECT_LE(v.*field, 1.0);
      lo = std::min(lo, v.*field);
      hi = std::max(hi, v.*field);
    }
    EXPECT_DOUBLE_EQ(lo, 0.0);
    EXPECT_DOUBLE_EQ(hi, 1.0);
  }
}

TEST(ScoreTest, CaseStudyWeights) {
  const std::vector<SequenceCriteria> seqs { { 1, 3, 0.72, 10 },
                                             { 2, 4, 0.50, 8 } };
  const auto ranked = score(seqs, kCaseStudy);
  ASSERT_EQ(ranked.size(), 2U);
  EXPECT_EQ(ranked[0].raw.leaf, 1U);
  EXPECT_EQ(ranked[0].rank, 1);
  EXPECT_NEAR(ranked[0].weighted_score, 0.7, 1e-12);
  EXPECT_NEAR(ranked[1].weighted_score, 0.3, 1e-12);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.steps, 1.0);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.duration, 0.0);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.yield, 1.0);
  EXPECT_DOUBLE_EQ(ranked[1].normalized.steps, 0.0);
  EXPECT_DOUBLE_EQ(ranked[1].normalized.duration, 1.0);
  EXPECT_DOUBLE_EQ(ranked[1].normalized.yield, 0.0);
}

TEST(ScoreTest, SingleSequence) {
  const std::vector<SequenceCriteria> seqs { { 9, 2, 0.4, 6 } };
  const auto ranked = score(seqs, kCaseStudy);
  ASSERT_EQ(ranked.size(), 1U);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.steps, 0.5);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.yield, 0.5);
  EXPECT_DOUBLE_EQ(ranked[0].normalized.duration, 0.5);
  EXPECT_DOUBLE_EQ(ranked[0].weighted_score, 0.5);
  EXPECT_EQ(ranked[0].rank, 1);
}

TEST(ScoreTest, StepsOnlyWeightsSortByStepCount) {
  std::mt19937_64 rng(11);
  auto seqs = random_instance(rng, 15);
  const auto ranked = score(seqs, { 1.0, 0.0, 0.0 });
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_LE(ranked[i - 1].raw.steps, ranked[i].raw.steps);
  }
}

TEST(ScoreTest, InvalidWeights) {
  const std::vector<SequenceCriteria> seqs { { 1, 1, 0.5, 1 } };
  EXPECT_SR_ERROR(score(seqs, { 0.5, 0.6, 0.2 }), ErrorCode::kInvalidWeights);
  EXPECT_SR_ERROR(score(seqs, { -0.1, 0.6, 0.5 }), ErrorCode::kInvalidWeights);
  EXPECT_SR_ERROR(score(seqs, { 0.1, 0.3, 0.6 + 1e-6 }),
                  ErrorCode::kInvalidWeights);
  EXPECT_NO_THROW(score(seqs, { 0.1, 0.3, 0.6 + 1e-10 }));
}

TEST(ScoreTest, TieBreakChain) {
  // Identical scores: all criteria degenerate except identity.
  const std::vector<SequenceCriteria> seqs { { 3, 2, 0.5, 4 },
                                             { 1, 2, 0.5, 4 },
                                             { 2, 2, 0.5, 4 } };
  EXPECT_EQ(order_of(score(seqs, kCaseStudy)),
            (std::vector<std::uint64_t> { 1, 2, 3 }));

  // With zero yield weight, higher yield still breaks the tie.
  const std::vector<SequenceCriteria> yields { { 1, 2, 0.3, 4 },
                                               { 2, 2, 0.6, 4 } };
  EXPECT_EQ(order_of(score(yields, { 0.5, 0.5, 0.0 })),
            (std::vector<std::uint64_t> { 2, 1 }));
}

TEST(ScoreTest, EmptyInputRanksNothing) {
  EXPECT_TRUE(score({}, kCaseStudy).empty());
}

TEST(RankingPropertyTest, RanksArePermutation) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto seqs = random_instance(rng, 1 + static_cast<int>(rng() % 30));
    const auto ranked = score(seqs, random_weights(rng));
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      ASSERT_EQ(ranked[i].rank, static_cast<int>(i + 1));
      if (i > 0) {
        ASSERT_GE(ranked[i - 1].weighted_score + 1e-12,
                  ranked[i].weighted_score);
      }
    }
  }
}

TEST(RankingPropertyTest, DurationRescalingKeepsOrder) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    auto seqs = random_instance(rng, 2 + static_cast<int>(rng() % 20));
    const CriteriaWeights w = random_weights(rng);
    const auto before = order_of(score(seqs, w));
    const double c = std::exp(std::uniform_real_distribution<double>(-5, 5)(rng));
    for (auto &s: seqs) {
      s.total_duration *= c;
    }
    ASSERT_EQ(order_of(score(seqs, w)), before) << "c=" << c;
  }
}

TEST(RankingPropertyTest, DominatedNeverRanksAbove) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    auto seqs = random_instance(rng, 2 + static_cast<int>(rng() % 10));
    // Make sequence 0 strictly dominate sequence 1.
    seqs[1].steps = seqs[0].steps + 1;
    seqs[1].total_yield = seqs[0].total_yield * 0.9;
    seqs[1].total_duration = seqs[0].total_duration + 1.0;
    const auto ranked = score(seqs, random_weights(rng));
    int rank_a = 0;
    int rank_b = 0;
    for (const RankEntry &e: ranked) {
      if (e.raw.leaf == seqs[0].leaf) {
        rank_a = e.rank;
      } else if (e.raw.leaf == seqs[1].leaf) {
        rank_b = e.rank;
      }
    }
    ASSERT_LT(rank_a, rank_b);
  }
}

TEST(RankingPropertyTest, TopSurvivesSmallWeightPerturbation) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const auto seqs = random_instance(rng, 3 + static_cast<int>(rng() % 10));
    const CriteriaWeights w = random_weights(rng);
    const auto ranked = score(seqs, w);
    const double gap = ranked[0].weighted_score - ranked[1].weighted_score;
    if (gap <= 1e-9) {
      continue;
    }
    ++checked;
    // |score change| <= 2 * eps for normalized values in [0, 1].
    const double eps = gap / 8.0;
    CriteriaWeights p { w.steps, w.duration, w.yield };
    const double shift = std::min({ eps, p.duration, 1.0 - p.steps });
    p.steps += shift;
    p.duration -= shift;
    EXPECT_EQ(score(seqs, p)[0].raw.leaf, ranked[0].raw.leaf);
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace synthroute::rank
