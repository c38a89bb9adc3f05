//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/rank/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "synthroute/error.h"

namespace synthroute::rank {
namespace {

constexpr double kWeightSumTolerance = 1e-9;
// Scores are compared on this grid so that rounding noise from rescaled
// inputs cannot reorder genuinely tied sequences.
constexpr double kScoreQuantum = 1e-12;

template <class Get>
void normalize_one(std::span<const SequenceCriteria> seqs,
                   std::vector<NormalizedCriteria> &out, Get get,
                   double NormalizedCriteria::*field, bool benefit) {
  double lo = get(seqs[0]);
  double hi = lo;
  for (const SequenceCriteria &s: seqs) {
    lo = std::min(lo, get(s));
    hi = std::max(hi, get(s));
  }
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (hi == lo) {
      out[i].*field = 0.5;
    } else if (benefit) {
      out[i].*field = (get(seqs[i]) - lo) / (hi - lo);
    } else {
      out[i].*field = (hi - get(seqs[i])) / (hi - lo);
    }
  }
}

}  // namespace

void CriteriaWeights::validate() const {
  for (double w: { steps, duration, yield }) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(ErrorCode::kInvalidWeights,
                  "each weight must lie in [0, 1]");
    }
  }
  if (std::abs(steps + duration + yield - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::kInvalidWeights, "weights must sum to 1");
  }
}

std::vector<NormalizedCriteria>
normalize_criteria(std::span<const SequenceCriteria> sequences) {
  if (sequences.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no decision sequences to normalize");
  }
  std::vector<NormalizedCriteria> out(sequences.size());
  normalize_one(
      sequences, out,
      [](const SequenceCriteria &s) { return static_cast<double>(s.steps); },
      &NormalizedCriteria::steps, false);
  normalize_one(
      sequences, out, [](const SequenceCriteria &s) { return s.total_yield; },
      &NormalizedCriteria::yield, true);
  normalize_one(
      sequences, out,
      [](const SequenceCriteria &s) { return s.total_duration; },
      &NormalizedCriteria::duration, false);
  return out;
}

std::vector<RankEntry> score(std::span<const SequenceCriteria> sequences,
                             const CriteriaWeights &weights) {
  weights.validate();
  if (sequences.empty()) {
    return {};
  }

  const auto norm = normalize_criteria(sequences);
  std::vector<RankEntry> entries(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    RankEntry &e = entries[i];
    e.raw = sequences[i];
    e.normalized = norm[i];
    e.weighted_score = weights.steps * norm[i].steps
                       + weights.yield * norm[i].yield
                       + weights.duration * norm[i].duration;
  }

  auto quantized = [](double s) { return std::llround(s / kScoreQuantum); };
  std::sort(entries.begin(), entries.end(),
            [&](const RankEntry &a, const RankEntry &b) {
              const auto qa = quantized(a.weighted_score);
              const auto qb = quantized(b.weighted_score);
              if (qa != qb) {
                return qa > qb;
              }
              if (a.raw.total_yield != b.raw.total_yield) {
                return a.raw.total_yield > b.raw.total_yield;
              }
              if (a.raw.steps != b.raw.steps) {
                return a.raw.steps < b.raw.steps;
              }
              return a.raw.leaf < b.raw.leaf;
            });

  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = static_cast<int>(i) + 1;
  }
  return entries;
}

}  // namespace synthroute::rank
