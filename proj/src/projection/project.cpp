//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/projection/project.h"

#include <algorithm>
#include <cmath>

#include "synthroute/error.h"

namespace synthroute::projection {

double default_perplexity(std::size_t n) {
  const double p = (static_cast<double>(n) - 1.0) / 3.0;
  return std::clamp(p, 1.0, 30.0);
}

double auto_learning_rate(std::size_t n, double early_exaggeration) {
  return static_cast<double>(n) / early_exaggeration;
}

ProjectionLayout project_corpus(std::span<const corpus::PaperRecord> papers,
                                std::span<const double> relevance,
                                const ProjectionParams &params,
                                const EmbeddingProvider &embedder,
                                std::stop_token stop) {
  if (!relevance.empty() && relevance.size() != papers.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "relevance must have one value per paper");
  }
  params.tsne.validate(papers.size());

  std::vector<std::string> texts;
  texts.reserve(papers.size());
  for (const corpus::PaperRecord &p: papers) {
    texts.push_back(p.embedding_text());
  }
  const std::vector<EmbeddingVector> embedded = embedder.embed_batch(texts);
  std::vector<std::vector<double>> vectors;
  vectors.reserve(embedded.size());
  for (const EmbeddingVector &e: embedded) {
    vectors.push_back(e.values());
  }

  TsneParams tp = params.tsne;
  if (params.auto_learning_rate) {
    tp.learning_rate = auto_learning_rate(papers.size(), tp.early_exaggeration);
  }
  const TsneResult t = tsne(vectors, tp, stop);

  // Uniform scale keeps the aspect ratio of the embedding.
  double min_x = INFINITY;
  double min_y = INFINITY;
  double max_x = -INFINITY;
  double max_y = -INFINITY;
  for (const Point2 &p: t.points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0.0 ? kCanvasSize / span : 1.0;
  std::vector<Point2> canvas;
  canvas.reserve(t.points.size());
  for (const Point2 &p: t.points) {
    canvas.push_back({ (p.x - min_x) * scale, (p.y - min_y) * scale });
  }

  const OverlapResult o = remove_overlap(
      canvas, params.min_distance, params.overlap_iterations, params.tsne.seed);

  ProjectionLayout layout;
  layout.perplexity = params.tsne.perplexity;
  layout.seed = params.tsne.seed;
  layout.overlap_converged = o.converged;
  layout.kl_final = t.kl_final;
  for (std::size_t i = 0; i < papers.size(); ++i) {
    ProjectedPoint pt;
    pt.paper_id = papers[i].id;
    pt.x = o.points[i].x;
    pt.y = o.points[i].y;
    pt.relevance = relevance.empty() ? 0.0 : relevance[i];
    pt.citation_count = papers[i].citation_count;
    pt.retrieval_rank = papers[i].retrieval_rank;
    layout.points.push_back(std::move(pt));
  }
  return layout;
}

}  // namespace synthroute::projection
