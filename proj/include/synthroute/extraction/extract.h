//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EXTRACTION_EXTRACT_H_
#define SYNTHROUTE_EXTRACTION_EXTRACT_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthroute/extraction/chat.h"
#include "synthroute/extraction/text.h"
#include "synthroute/projection/embedding.h"
#include "synthroute/route/reaction.h"

namespace synthroute::extraction {

inline constexpr int kDefaultMaxRetries = 3;
inline constexpr double kDefaultRelevancyThreshold = 0.5;
inline constexpr double kRecommendationThreshold = 0.6;

enum class ExtractionStatus { kFound, kNotFound };

std::string to_string(ExtractionStatus s);

struct ExtractionResult {
  ExtractionStatus status = ExtractionStatus::kNotFound;
  // Each required key plus "purification" when the answer has it. Values
  // are raw text; std::nullopt marks an explicit or filled-in null.
  std::map<std::string, std::optional<std::string>> fields;
  // Required keys absent from the answer and filled with null.
  std::vector<std::string> missing_keys;
  int attempts = 0;
  double context_relevancy = 0.0;
  std::vector<std::string> source_paragraphs;
  std::string raw_answer;

  friend bool operator==(const ExtractionResult &,
                         const ExtractionResult &) = default;
};

nlohmann::json to_json(const ExtractionResult &r);
ExtractionResult extraction_from_json(const nlohmann::json &j);

struct ExtractionOptions {
  int max_retries = kDefaultMaxRetries;
  int top_k = kDefaultTopK;
  double relevancy_threshold = kDefaultRelevancyThreshold;
};

// chunk -> retrieve -> prompt -> provider -> strict JSON parse. A reply
// that is not a JSON object (an optional ``` fence is tolerated) triggers
// a retry with the strictness directive appended, up to max_retries times.
// Throws kMalformedAfterRetries once every attempt failed, kEmptyText for a
// blank document, and propagates kProviderUnavailable.
ExtractionResult extract_reaction(std::string_view document,
                                  const std::string &reactant,
                                  const std::string &expected_reaction,
                                  const ChatProvider &chat,
                                  const projection::EmbeddingProvider &embedder,
                                  const ExtractionOptions &options = {});

// Share of context sentences whose cosine to the answer is at least tau.
// Throws kEmptyContext when the context has no sentence and kEmptyText for
// a blank answer.
double context_relevancy(const std::string &answer,
                         std::span<const std::string> context,
                         const projection::EmbeddingProvider &embedder,
                         double tau = kDefaultRelevancyThreshold);

struct RelevancyStats {
  double mean = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::vector<double> history;
};

// Mean and linearly interpolated quartiles (h = (n - 1) p). Throws
// kEmptyHistory for no values and kInvalidArgument for values outside
// [0, 1].
RelevancyStats relevancy_stats(std::span<const double> history);

struct AnnotatedOperation {
  std::string operation;
  route::DifficultyAnnotation annotation;
};

struct DifficultyRecommendation {
  route::DifficultyAnnotation annotation;
  double similarity = 0.0;
  std::size_t source_index = 0;
};

// The annotation of the most similar past operation text (earliest wins a
// tie), when its cosine reaches the threshold.
std::optional<DifficultyRecommendation>
recommend_difficulty(const std::string &operation,
                     std::span<const AnnotatedOperation> history,
                     const projection::EmbeddingProvider &embedder,
                     double threshold = kRecommendationThreshold);

}  // namespace synthroute::extraction

#endif  // SYNTHROUTE_EXTRACTION_EXTRACT_H_
