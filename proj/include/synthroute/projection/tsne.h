//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_PROJECTION_TSNE_H_
#define SYNTHROUTE_PROJECTION_TSNE_H_

#include <cstdint>
#include <span>
#include <stop_token>
#include <vector>

namespace synthroute::projection {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

struct TsneParams {
  double perplexity = 30.0;
  int iterations = 750;
  double learning_rate = 200.0;
  double early_exaggeration = 12.0;
  int exaggeration_iterations = 250;
  double initial_momentum = 0.5;
  double final_momentum = 0.8;
  int momentum_switch = 250;
  std::uint64_t seed = 42;

  // Throws kTooFewPoints (n < 5) or kBadPerplexity (perplexity not in
  // (0, n - 1)) or kInvalidArgument (iterations < 250).
  void validate(std::size_t n) const;
};

inline constexpr double kPerplexityTolerance = 1e-4;
inline constexpr int kMaxSigmaSteps = 64;

struct SigmaSearch {
  double sigma = 1.0;
  bool converged = false;
  int steps = 0;
  // 2^H of the returned conditional distribution.
  double perplexity = 0.0;
  // p_{j|i} for each input distance, summing to 1.
  std::vector<double> probabilities;
};

// Bisection on the Gaussian bandwidth so that the conditional distribution
// p_j ~ exp(-d_j^2 / 2 sigma^2) has perplexity 2^H within 1e-4 of the
// target, for at most 64 steps. On failure the best sigma found is returned
// with converged = false. Throws kInvalidArgument for fewer than 2 distances
// or a non-positive perplexity.
SigmaSearch search_sigma(std::span<const double> distances, double perplexity);

struct TsneResult {
  std::vector<Point2> points;
  // KL(P || Q) without exaggeration at the random start and at the end.
  double kl_initial = 0.0;
  double kl_final = 0.0;
  int iterations = 0;
  bool all_sigmas_converged = true;
};

// Exact t-SNE. Deterministic for a given seed. Throws kCanceled when stop is
// requested between iterations.
TsneResult tsne(std::span<const std::vector<double>> vectors,
                const TsneParams &params, std::stop_token stop = {});

namespace detail {

// Row-major n x n symmetrized joint probabilities.
struct JointP {
  std::size_t n = 0;
  std::vector<double> p;
  bool all_converged = true;
};

JointP joint_probabilities(std::span<const std::vector<double>> vectors,
                           double perplexity);

// Gradient of KL(exaggeration * P || Q) w.r.t. each 2-D point.
std::vector<Point2> gradient(const JointP &p, std::span<const Point2> y,
                             double exaggeration);

double kl_divergence(const JointP &p, std::span<const Point2> y);

}  // namespace detail

}  // namespace synthroute::projection

#endif  // SYNTHROUTE_PROJECTION_TSNE_H_
