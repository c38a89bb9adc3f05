//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/projection/tsne.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "synthroute/error.h"

namespace synthroute::projection {
namespace {

// Bisection runs over ln(beta) where beta scales distances normalized by
// their mean square.
constexpr double kLogBetaLo = -40.0;
constexpr double kLogBetaHi = 40.0;

struct Conditional {
  std::vector<double> p;
  double perplexity;
};

Conditional conditional(std::span<const double> shifted, double beta) {
  Conditional c;
  c.p.resize(shifted.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    c.p[j] = std::exp(-beta * shifted[j]);
    sum += c.p[j];
  }
  double h = 0.0;  // nats
  for (double &v: c.p) {
    v /= sum;
    if (v > 0.0) {
      h -= v * std::log(v);
    }
  }
  c.perplexity = std::exp(h);
  return c;
}

// Portable standard normal from raw 64-bit draws (Box-Muller).
double normal(std::mt19937_64 &rng) {
  constexpr double kTwo53 = 9007199254740992.0;
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) / (kTwo53 + 1.0);
  const double u2 = static_cast<double>(rng() >> 11) / kTwo53;
  return std::sqrt(-2.0 * std::log(u1))
         * std::cos(2.0 * std::numbers::pi * u2);
}

double squared_distance(const std::vector<double> &a,
                        const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

}  // namespace

void TsneParams::validate(std::size_t n) const {
  if (n < 5) {
    throw Error(ErrorCode::kTooFewPoints,
                "t-SNE needs at least 5 points, got " + std::to_string(n));
  }
  if (!(perplexity > 0.0) || !(perplexity < static_cast<double>(n) - 1.0)) {
    throw Error(ErrorCode::kBadPerplexity,
                "perplexity must lie in (0, " + std::to_string(n - 1)
                    + "), got " + std::to_string(perplexity));
  }
  if (iterations < 250) {
    throw Error(ErrorCode::kInvalidArgument,
                "t-SNE needs at least 250 iterations");
  }
}

SigmaSearch search_sigma(std::span<const double> distances,
                         double perplexity) {
  if (distances.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "sigma search needs at least two distances");
  }
  if (!(perplexity > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "perplexity must be positive");
  }

  std::vector<double> sq(distances.size());
  double lo_sq = INFINITY;
  double mean_sq = 0.0;
  for (std::size_t j = 0; j < distances.size(); ++j) {
    sq[j] = distances[j] * distances[j];
    lo_sq = std::min(lo_sq, sq[j]);
    mean_sq += sq[j];
  }
  mean_sq /= static_cast<double>(sq.size());
  const double scale = mean_sq > 0.0 ? mean_sq : 1.0;
  // Shifting by the minimum leaves the distribution unchanged and keeps the
  // exponentials away from underflow.
  std::vector<double> shifted(sq.size());
  for (std::size_t j = 0; j < sq.size(); ++j) {
    shifted[j] = (sq[j] - lo_sq) / scale;
  }

  SigmaSearch best;
  double best_err = INFINITY;
  double best_beta = 1.0;
  double lo = kLogBetaLo;
  double hi = kLogBetaHi;
  for (int step = 1; step <= kMaxSigmaSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double beta = std::exp(mid);
    Conditional c = conditional(shifted, beta);
    const double reached = c.perplexity;
    const double err = std::abs(reached - perplexity);
    if (err < best_err) {
      best_err = err;
      best_beta = beta;
      best.perplexity = reached;
      best.probabilities = std::move(c.p);
      best.steps = step;
    }
    if (err <= kPerplexityTolerance) {
      best.converged = true;
      break;
    }
    // Perplexity falls as beta grows.
    if (reached > perplexity) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  best.sigma = std::sqrt(scale / (2.0 * best_beta));
  return best;
}

namespace detail {

JointP joint_probabilities(std::span<const std::vector<double>> vectors,
                           double perplexity) {
  const std::size_t n = vectors.size();
  JointP joint;
  joint.n = n;
  joint.p.assign(n * n, 0.0);

  std::vector<double> dist(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        dist[k++] = std::sqrt(squared_distance(vectors[i], vectors[j]));
      }
    }
    const SigmaSearch s = search_sigma(dist, perplexity);
    joint.all_converged = joint.all_converged && s.converged;
    k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        joint.p[i * n + j] = s.probabilities[k++];
      }
    }
  }

  const double denom = 2.0 * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = (joint.p[i * n + j] + joint.p[j * n + i]) / denom;
      joint.p[i * n + j] = v;
      joint.p[j * n + i] = v;
    }
  }
  return joint;
}

std::vector<Point2> gradient(const JointP &p, std::span<const Point2> y,
                             double exaggeration) {
  const std::size_t n = p.n;
  std::vector<double> num(n * n, 0.0);
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = y[i].x - y[j].x;
      const double dy = y[i].y - y[j].y;
      const double v = 1.0 / (1.0 + dx * dx + dy * dy);
      num[i * n + j] = v;
      num[j * n + i] = v;
      z += 2.0 * v;
    }
  }

  std::vector<Point2> grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = num[i * n + j];
      const double mult =
          4.0 * (exaggeration * p.p[i * n + j] - v / z) * v;
      const double fx = mult * (y[i].x - y[j].x);
      const double fy = mult * (y[i].y - y[j].y);
      grad[i].x += fx;
      grad[i].y += fy;
      grad[j].x -= fx;
      grad[j].y -= fy;
    }
  }
  return grad;
}

double kl_divergence(const JointP &p, std::span<const Point2> y) {
  const std::size_t n = p.n;
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = y[i].x - y[j].x;
      const double dy = y[i].y - y[j].y;
      z += 2.0 / (1.0 + dx * dx + dy * dy);
    }
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double pij = p.p[i * n + j];
      if (i == j || pij <= 0.0) {
        continue;
      }
      const double dx = y[i].x - y[j].x;
      const double dy = y[i].y - y[j].y;
      const double q = 1.0 / (1.0 + dx * dx + dy * dy) / z;
      kl += pij * std::log(pij / q);
    }
  }
  return kl;
}

}  // namespace detail

TsneResult tsne(std::span<const std::vector<double>> vectors,
                const TsneParams &params, std::stop_token stop) {
  const std::size_t n = vectors.size();
  params.validate(n);
  for (const auto &v: vectors) {
    if (v.size() != vectors[0].size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "t-SNE inputs must share one dimension");
    }
  }

  const detail::JointP p = detail::joint_probabilities(vectors, params.perplexity);

  std::mt19937_64 rng(params.seed);
  std::vector<Point2> y(n);
  for (Point2 &pt: y) {
    pt.x = 1e-4 * normal(rng);
    pt.y = 1e-4 * normal(rng);
  }

  TsneResult result;
  result.all_sigmas_converged = p.all_converged;
  result.kl_initial = detail::kl_divergence(p, y);

  std::vector<Point2> update(n);
  std::vector<Point2> gains(n, Point2 { 1.0, 1.0 });
  auto step_axis = [&params](double g, double &u, double &gain,
                             double momentum) {
    gain = (g > 0.0) != (u > 0.0) ? gain + 0.2 : gain * 0.8;
    gain = std::max(gain, 0.01);
    u = momentum * u - params.learning_rate * gain * g;
  };

  for (int it = 0; it < params.iterations; ++it) {
    if (stop.stop_requested()) {
      throw Error(ErrorCode::kCanceled, "t-SNE canceled");
    }
    const double exaggeration =
        it < params.exaggeration_iterations ? params.early_exaggeration : 1.0;
    const double momentum = it < params.momentum_switch
                                ? params.initial_momentum
                                : params.final_momentum;
    const std::vector<Point2> grad = detail::gradient(p, y, exaggeration);

    Point2 mean;
    for (std::size_t i = 0; i < n; ++i) {
      step_axis(grad[i].x, update[i].x, gains[i].x, momentum);
      step_axis(grad[i].y, update[i].y, gains[i].y, momentum);
      y[i].x += update[i].x;
      y[i].y += update[i].y;
      mean.x += y[i].x;
      mean.y += y[i].y;
    }
    mean.x /= static_cast<double>(n);
    mean.y /= static_cast<double>(n);
    for (Point2 &pt: y) {
      pt.x -= mean.x;
      pt.y -= mean.y;
    }
  }

  result.kl_final = detail::kl_divergence(p, y);
  result.iterations = params.iterations;
  result.points = std::move(y);
  return result;
}

}  // namespace synthroute::projection
