//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/projection/overlap.h"

#include <cmath>
#include <numbers>

#include "synthroute/error.h"
#include "synthroute/hash.h"

namespace synthroute::projection {
namespace {

// Pairs are separated to 1% beyond d_min. Without the margin, small nudges
// from neighbouring pairs keep re-creating violations and dense clusters
// need hundreds of sweeps.
constexpr double kMargin = 0.01;

Point2 hashed_direction(std::uint64_t seed, std::size_t i, std::size_t j) {
  const std::uint64_t h = Fnv1a().add(seed).add(i).add(j).digest();
  const double angle = 2.0 * std::numbers::pi
                       * static_cast<double>(h >> 11) / 9007199254740992.0;
  return { std::cos(angle), std::sin(angle) };
}

}  // namespace

OverlapResult remove_overlap(std::span<const Point2> points, double d_min,
                             int max_iter, std::uint64_t seed) {
  if (!(d_min > 0.0) || !std::isfinite(d_min)) {
    throw Error(ErrorCode::kInvalidArgument, "d_min must be positive");
  }
  for (const Point2 &p: points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite point");
    }
  }

  OverlapResult r;
  r.points.assign(points.begin(), points.end());
  auto &pts = r.points;
  const double target = d_min * (1.0 + kMargin);

  for (int sweep = 0; sweep < max_iter; ++sweep) {
    bool violated = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        double dx = pts[j].x - pts[i].x;
        double dy = pts[j].y - pts[i].y;
        const double d = std::hypot(dx, dy);
        if (d >= d_min) {
          continue;
        }
        violated = true;
        if (d < 1e-12 * d_min) {
          const Point2 dir = hashed_direction(seed, i, j);
          dx = dir.x;
          dy = dir.y;
        } else {
          dx /= d;
          dy /= d;
        }
        const double push = 0.5 * (target - d);
        pts[i].x -= dx * push;
        pts[i].y -= dy * push;
        pts[j].x += dx * push;
        pts[j].y += dy * push;
      }
    }
    if (!violated) {
      r.converged = true;
      return r;
    }
    ++r.iterations;
  }

  // The last sweep may have repaired every pair; check once more.
  r.converged = true;
  for (std::size_t i = 0; i < pts.size() && r.converged; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::hypot(pts[j].x - pts[i].x, pts[j].y - pts[i].y) < d_min) {
        r.converged = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace synthroute::projection
