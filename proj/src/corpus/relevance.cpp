//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/corpus/relevance.h"

#include <algorithm>

namespace synthroute::corpus {

std::string query_context(const std::string &smiles,
                          const std::string &expected_reaction) {
  if (expected_reaction.empty()) {
    return smiles;
  }
  return smiles + " " + expected_reaction;
}

std::vector<double>
relevance_scores(std::span<const PaperRecord> papers,
                 const std::string &context,
                 const projection::EmbeddingProvider &embedder) {
  if (papers.empty()) {
    return {};
  }
  std::vector<std::string> texts { context };
  for (const PaperRecord &p: papers) {
    texts.push_back(p.embedding_text());
  }
  const auto vecs = embedder.embed_batch(texts);

  std::vector<double> scores;
  scores.reserve(papers.size());
  for (std::size_t i = 1; i < vecs.size(); ++i) {
    scores.push_back(projection::cosine(vecs[0], vecs[i]));
  }
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  const double min = *lo;
  const double range = *hi - *lo;
  for (double &s: scores) {
    s = range > 1e-12 ? (s - min) / range : 1.0;
  }
  return scores;
}

}  // namespace synthroute::corpus
