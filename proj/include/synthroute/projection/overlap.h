//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_PROJECTION_OVERLAP_H_
#define SYNTHROUTE_PROJECTION_OVERLAP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "synthroute/projection/tsne.h"

namespace synthroute::projection {

inline constexpr double kDefaultMinDistance = 4.0;
inline constexpr int kDefaultOverlapIterations = 300;

struct OverlapResult {
  std::vector<Point2> points;
  bool converged = false;
  // Sweeps that found at least one violation.
  int iterations = 0;
};

// Sweeps all pairs, pushing any pair closer than d_min apart symmetrically
// along their separation until it sits 1% beyond d_min. Coincident pairs separate
// along a direction hashed from (seed, i, j). Stops after a clean sweep or
// max_iter sweeps. Input that already satisfies d_min is returned as is.
// Throws kInvalidArgument for d_min <= 0 or non-finite input.
OverlapResult remove_overlap(std::span<const Point2> points, double d_min,
                             int max_iter = kDefaultOverlapIterations,
                             std::uint64_t seed = 0);

}  // namespace synthroute::projection

#endif  // SYNTHROUTE_PROJECTION_OVERLAP_H_
