//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_PROJECTION_EMBEDDING_H_
#define SYNTHROUTE_PROJECTION_EMBEDDING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synthroute/http_client.h"

namespace synthroute::projection {

inline constexpr int kDefaultEmbeddingDim = 256;

// Unit-norm embedding. Construction normalizes; a zero vector stays zero.
class EmbeddingVector {
public:
  EmbeddingVector() = default;
  explicit EmbeddingVector(std::vector<double> values);

  const std::vector<double> &values() const { return values_; }
  std::size_t dimension() const { return values_.size(); }

  friend bool operator==(const EmbeddingVector &,
                         const EmbeddingVector &) = default;

private:
  std::vector<double> values_;
};

// Dot product over the norms; 0 when either vector is zero. Throws
// kLengthMismatch on differing dimensions.
double cosine(const EmbeddingVector &a, const EmbeddingVector &b);

class EmbeddingProvider {
public:
  virtual ~EmbeddingProvider() = default;

  // Throws kEmptyText for blank inputs, kProviderUnavailable for transport
  // failures.
  virtual std::vector<EmbeddingVector>
  embed_batch(std::span<const std::string> texts) const = 0;

  EmbeddingVector embed(std::string_view text) const;
};

// Offline embedding: character trigrams of the lowercased, whitespace-folded
// text, weighted tf * idf and hashed (FNV-1a) into `dim` buckets.
//
// idf(t) = 1 + ln(N / df(t)) over the fitted documents. Trigrams never seen
// during fit take the largest fitted idf. Before fit() every idf is 1. Both
// rules depend only on document-frequency ratios, so a corpus duplicated k
// times yields the same embeddings.
class TrigramEmbedder final: public EmbeddingProvider {
public:
  explicit TrigramEmbedder(int dim = kDefaultEmbeddingDim);

  void fit(std::span<const std::string> documents);

  std::vector<EmbeddingVector>
  embed_batch(std::span<const std::string> texts) const override;

  int dimension() const { return dim_; }
  std::size_t document_count() const { return doc_count_; }

  // Bucket index of one trigram, exposed for bucket-trace tests.
  int bucket_of(std::string_view trigram) const;
  // The normalized trigrams of a text, in order.
  static std::vector<std::string> trigrams(std::string_view text);

private:
  double idf(std::uint64_t trigram_hash) const;

  int dim_;
  std::size_t doc_count_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> doc_freq_;
  double unseen_idf_ = 1.0;
};

// Remote embedding service speaking the common JSON contract:
//   POST {base}/embeddings  {"model": m, "input": [texts]}
//   -> {"data": [{"embedding": [..]}, ...]}
class HttpEmbeddingProvider final: public EmbeddingProvider {
public:
  HttpEmbeddingProvider(HttpEndpoint endpoint, std::string model);

  std::vector<EmbeddingVector>
  embed_batch(std::span<const std::string> texts) const override;

private:
  HttpEndpoint endpoint_;
  std::string model_;
};

}  // namespace synthroute::projection

#endif  // SYNTHROUTE_PROJECTION_EMBEDDING_H_
