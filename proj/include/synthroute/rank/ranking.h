//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_RANK_RANKING_H_
#define SYNTHROUTE_RANK_RANKING_H_

#include <cstdint>
#include <span>
#include <vector>

namespace synthroute::rank {

struct CriteriaWeights {
  double steps = 1.0 / 3.0;
  double duration = 1.0 / 3.0;
  double yield = 1.0 / 3.0;

  // Throws kInvalidWeights unless each weight is in [0, 1] and they sum to 1
  // within 1e-9.
  void validate() const;

  friend bool operator==(const CriteriaWeights &,
                         const CriteriaWeights &) = default;
};

// Raw criteria of one decision sequence.
struct SequenceCriteria {
  std::uint64_t leaf = 0;
  int steps = 0;
  double total_yield = 1.0;
  double total_duration = 0.0;
};

// Each value in [0, 1], higher is better.
struct NormalizedCriteria {
  double steps = 0.5;
  double yield = 0.5;
  double duration = 0.5;
};

struct RankEntry {
  SequenceCriteria raw;
  NormalizedCriteria normalized;
  double weighted_score = 0.0;
  int rank = 0;
};

// Min-max normalization. Yield is a benefit criterion, (v - min) / (max -
// min); steps and duration are costs, (max - v) / (max - min). A criterion
// whose values are all equal normalizes to 0.5. Throws kEmptyInput.
std::vector<NormalizedCriteria>
normalize_criteria(std::span<const SequenceCriteria> sequences);

// Weighted sum of normalized criteria, sorted best first. Ties (scores equal
// to 1e-12) fall back to higher total yield, then fewer steps, then leaf id.
// An empty input yields an empty ranking.
std::vector<RankEntry> score(std::span<const SequenceCriteria> sequences,
                             const CriteriaWeights &weights);

}  // namespace synthroute::rank

#endif  // SYNTHROUTE_RANK_RANKING_H_
