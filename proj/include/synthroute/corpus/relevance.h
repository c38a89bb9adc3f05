//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CORPUS_RELEVANCE_H_
#define SYNTHROUTE_CORPUS_RELEVANCE_H_

#include <span>
#include <string>
#include <vector>

#include "synthroute/corpus/paper.h"
#include "synthroute/projection/embedding.h"

namespace synthroute::corpus {

// The SMILES followed by the expected-reaction text, space separated.
std::string query_context(const std::string &smiles,
                          const std::string &expected_reaction);

// Cosine between the query context and each paper's title + abstract,
// min-max rescaled over the set. A single paper, or a set whose cosines are
// all equal, scores 1.0 throughout.
std::vector<double>
relevance_scores(std::span<const PaperRecord> papers,
                 const std::string &context,
                 const projection::EmbeddingProvider &embedder);

}  // namespace synthroute::corpus

#endif  // SYNTHROUTE_CORPUS_RELEVANCE_H_
