//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/extraction/text.h"

#include <algorithm>
#include <cctype>

#include "synthroute/error.h"

namespace synthroute::extraction {
namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

bool opens_sentence(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0
         || std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '('
         || c == '[' || c == '"';
}

// Offsets just past each sentence terminator that ends a sentence.
std::vector<std::size_t> sentence_ends(std::string_view text) {
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      continue;
    }
    std::size_t j = i + 1;
    if (j == text.size()) {
      ends.push_back(j);
      continue;
    }
    if (!is_space(text[j])) {
      continue;
    }
    while (j < text.size() && is_space(text[j])) {
      ++j;
    }
    if (j == text.size() || opens_sentence(text[j])) {
      ends.push_back(i + 1);
    }
  }
  return ends;
}

std::size_t cut_point(std::string_view s) {
  std::size_t best = 0;
  std::size_t best_gap = std::string_view::npos;
  for (const std::size_t end: sentence_ends(s)) {
    if (end > kMaxParagraphChars) {
      break;
    }
    if (end == s.size()) {
      continue;
    }
    const std::size_t gap = end > kTargetParagraphChars
                                ? end - kTargetParagraphChars
                                : kTargetParagraphChars - end;
    if (gap < best_gap) {
      best_gap = gap;
      best = end;
    }
  }
  if (best > 0) {
    return best;
  }
  for (std::size_t off = 0; off < kTargetParagraphChars; ++off) {
    if (is_space(s[kTargetParagraphChars - off])) {
      return kTargetParagraphChars - off;
    }
    if (kTargetParagraphChars + off < kMaxParagraphChars
        && is_space(s[kTargetParagraphChars + off])) {
      return kTargetParagraphChars + off;
    }
  }
  return kTargetParagraphChars;
}

void split_long(std::string_view para, std::vector<std::string> &out) {
  while (para.size() > kMaxParagraphChars) {
    const std::size_t cut = cut_point(para);
    const std::string_view head = trim(para.substr(0, cut));
    if (!head.empty()) {
      out.emplace_back(head);
    }
    para = trim(para.substr(cut));
  }
  if (!para.empty()) {
    out.emplace_back(para);
  }
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (const std::size_t end: sentence_ends(text)) {
    const std::string_view s = trim(text.substr(start, end - start));
    if (!s.empty()) {
      out.emplace_back(s);
    }
    start = end;
  }
  const std::string_view rest = trim(text.substr(start));
  if (!rest.empty()) {
    out.emplace_back(rest);
  }
  return out;
}

std::vector<std::string> chunk_document(std::string_view text) {
  if (trim(text).empty()) {
    throw Error(ErrorCode::kEmptyText, "document is empty");
  }
  std::vector<std::string> out;
  std::size_t pos = 0;
  std::size_t block_start = 0;
  auto flush = [&](std::size_t end) {
    const std::string_view block = trim(text.substr(block_start, end - block_start));
    if (!block.empty()) {
      split_long(block, out);
    }
  };
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::size_t line_end = eol == std::string_view::npos ? text.size() : eol;
    if (trim(text.substr(pos, line_end - pos)).empty()) {
      flush(pos);
      block_start = line_end;
    }
    pos = line_end + 1;
  }
  flush(text.size());
  return out;
}

std::vector<RankedParagraph>
retrieve_relevant(std::span<const std::string> paragraphs,
                  const std::string &query,
                  const projection::EmbeddingProvider &embedder, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  if (paragraphs.empty()) {
    return {};
  }
  std::vector<std::string> texts { query };
  texts.insert(texts.end(), paragraphs.begin(), paragraphs.end());
  const auto vecs = embedder.embed_batch(texts);

  std::vector<RankedParagraph> ranked;
  ranked.reserve(paragraphs.size());
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    ranked.push_back({ i, paragraphs[i], projection::cosine(vecs[0], vecs[i + 1]) });
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedParagraph &a, const RankedParagraph &b) {
                     return a.score > b.score;
                   });
  if (ranked.size() > static_cast<std::size_t>(k)) {
    ranked.resize(k);
  }
  return ranked;
}

}  // namespace synthroute::extraction
