//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/projection/embedding.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <utility>

#include "synthroute/error.h"
#include "synthroute/hash.h"

namespace synthroute::projection {
namespace {

std::string fold_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool space = false;
  for (char c: text) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      space = !out.empty();
      continue;
    }
    if (space) {
      out += ' ';
      space = false;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void check_text(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos) {
    throw Error(ErrorCode::kEmptyText, "cannot embed empty text");
  }
}

}  // namespace

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)) {
  double norm = 0.0;
  for (double v: values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "embedding has a non-finite entry");
    }
    norm += v * v;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double &v: values_) {
      v /= norm;
    }
  }
}

double cosine(const EmbeddingVector &a, const EmbeddingVector &b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kLengthMismatch, "embedding dimensions differ");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    dot += a.values()[i] * b.values()[i];
    na += a.values()[i] * a.values()[i];
    nb += b.values()[i] * b.values()[i];
  }
  if (na == 0.0 || nb == 0.0) {
    return 0.0;
  }
  return dot / std::sqrt(na * nb);
}

EmbeddingVector EmbeddingProvider::embed(std::string_view text) const {
  const std::string s(text);
  return embed_batch(std::span<const std::string>(&s, 1)).front();
}

TrigramEmbedder::TrigramEmbedder(int dim): dim_(dim) {
  if (dim <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "embedding dimension must be positive");
  }
}

std::vector<std::string> TrigramEmbedder::trigrams(std::string_view text) {
  const std::string folded = fold_text(text);
  std::vector<std::string> out;
  if (folded.size() < 3) {
    if (!folded.empty()) {
      out.push_back(folded);
    }
    return out;
  }
  for (std::size_t i = 0; i + 3 <= folded.size(); ++i) {
    out.push_back(folded.substr(i, 3));
  }
  return out;
}

int TrigramEmbedder::bucket_of(std::string_view trigram) const {
  return static_cast<int>(fnv1a(trigram) % static_cast<std::uint64_t>(dim_));
}

void TrigramEmbedder::fit(std::span<const std::string> documents) {
  doc_freq_.clear();
  doc_count_ = documents.size();
  for (const std::string &doc: documents) {
    std::set<std::uint64_t> seen;
    for (const std::string &t: trigrams(doc)) {
      seen.insert(fnv1a(t));
    }
    for (std::uint64_t h: seen) {
      ++doc_freq_[h];
    }
  }

  unseen_idf_ = 1.0;
  for (const auto &[h, df]: doc_freq_) {
    unseen_idf_ = std::max(unseen_idf_, idf(h));
  }
}

double TrigramEmbedder::idf(std::uint64_t trigram_hash) const {
  if (doc_count_ == 0) {
    return 1.0;
  }
  auto it = doc_freq_.find(trigram_hash);
  if (it == doc_freq_.end()) {
    return unseen_idf_;
  }
  return 1.0
         + std::log(static_cast<double>(doc_count_)
                    / static_cast<double>(it->second));
}

std::vector<EmbeddingVector>
TrigramEmbedder::embed_batch(std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string &text: texts) {
    check_text(text);
    std::unordered_map<std::uint64_t, int> tf;
    for (const std::string &t: trigrams(text)) {
      ++tf[fnv1a(t)];
    }
    std::vector<double> v(dim_, 0.0);
    for (const auto &[h, count]: tf) {
      v[h % static_cast<std::uint64_t>(dim_)] += count * idf(h);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpEndpoint endpoint,
                                             std::string model)
    : endpoint_(std::move(endpoint)), model_(std::move(model)) { }

std::vector<EmbeddingVector>
HttpEmbeddingProvider::embed_batch(std::span<const std::string> texts) const {
  for (const std::string &t: texts) {
    check_text(t);
  }
  nlohmann::json body = { { "model", model_ },
                          { "input", std::vector<std::string>(texts.begin(),
                                                              texts.end()) } };
  const nlohmann::json reply = http_post_json(endpoint_, "/embeddings", body);

  std::vector<EmbeddingVector> out;
  try {
    const auto &data = reply.at("data");
    if (data.size() != texts.size()) {
      throw Error(ErrorCode::kProviderUnavailable,
                  "embedding reply has the wrong number of vectors");
    }
    for (const auto &item: data) {
      out.emplace_back(item.at("embedding").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kProviderUnavailable,
                std::string("malformed embedding reply: ") + e.what());
  }
  return out;
}

}  // namespace synthroute::projection
