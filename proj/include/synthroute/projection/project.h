//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_PROJECTION_PROJECT_H_
#define SYNTHROUTE_PROJECTION_PROJECT_H_

#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "synthroute/corpus/paper.h"
#include "synthroute/projection/embedding.h"
#include "synthroute/projection/overlap.h"
#include "synthroute/projection/tsne.h"

namespace synthroute::projection {

// Layout canvas is [0, kCanvasSize] on both axes.
inline constexpr double kCanvasSize = 100.0;

struct ProjectedPoint {
  std::string paper_id;
  double x = 0.0;
  double y = 0.0;
  double relevance = 0.0;
  int citation_count = 0;
  int retrieval_rank = 1;

  friend bool operator==(const ProjectedPoint &,
                         const ProjectedPoint &) = default;
};

struct ProjectionParams {
  TsneParams tsne;
  // Replace tsne.learning_rate with auto_learning_rate(n).
  bool auto_learning_rate = true;
  double min_distance = kDefaultMinDistance;
  int overlap_iterations = kDefaultOverlapIterations;
};

struct ProjectionLayout {
  std::vector<ProjectedPoint> points;
  double perplexity = 0.0;
  std::uint64_t seed = 0;
  bool overlap_converged = true;
  double kl_final = 0.0;
};

// A perplexity that satisfies the t-SNE bound for n points: (n - 1) / 3
// capped at 30.
double default_perplexity(std::size_t n);

// n / early_exaggeration. A fixed rate of 200 overshoots during early
// exaggeration when n is around 100 and flings single points far from the
// rest.
double auto_learning_rate(std::size_t n, double early_exaggeration);

// Embeds title + abstract, projects with t-SNE, scales the result onto the
// canvas and separates overlapping points. relevance[i] is attached to
// papers[i]; it must be empty or the same length as papers.
ProjectionLayout project_corpus(std::span<const corpus::PaperRecord> papers,
                                std::span<const double> relevance,
                                const ProjectionParams &params,
                                const EmbeddingProvider &embedder,
                                std::stop_token stop = {});

}  // namespace synthroute::projection

#endif  // SYNTHROUTE_PROJECTION_PROJECT_H_
