//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EXTRACTION_TEXT_H_
#define SYNTHROUTE_EXTRACTION_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synthroute/projection/embedding.h"

namespace synthroute::extraction {

inline constexpr std::size_t kMaxParagraphChars = 1200;
inline constexpr std::size_t kTargetParagraphChars = 800;
inline constexpr int kDefaultTopK = 6;

// Sentences end at '.', '!' or '?' followed by whitespace and an uppercase
// letter, digit or opening bracket, or at the end of the text. Sentences
// are trimmed; empty ones are dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Splits on blank lines. A paragraph longer than 1200 characters is cut at
// the sentence boundary nearest 800 characters (among boundaries that keep
// the piece within 1200), repeatedly; a run with no usable boundary is cut
// at whitespace, or hard at 800. Throws kEmptyText for blank input.
std::vector<std::string> chunk_document(std::string_view text);

struct RankedParagraph {
  std::size_t index = 0;
  std::string text;
  double score = 0.0;
};

// Top-k paragraphs by cosine to the query, best first, ties in original
// order. Throws kInvalidArgument for k < 1.
std::vector<RankedParagraph>
retrieve_relevant(std::span<const std::string> paragraphs,
                  const std::string &query,
                  const projection::EmbeddingProvider &embedder,
                  int k = kDefaultTopK);

}  // namespace synthroute::extraction

#endif  // SYNTHROUTE_EXTRACTION_TEXT_H_
