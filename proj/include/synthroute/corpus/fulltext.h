//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CORPUS_FULLTEXT_H_
#define SYNTHROUTE_CORPUS_FULLTEXT_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synthroute/corpus/paper.h"
#include "synthroute/http_client.h"

namespace synthroute::corpus {

class FullTextProvider {
public:
  virtual ~FullTextProvider() = default;

  // Plain text of the paper. Throws kFullTextUnavailable or
  // kExtractionFailed.
  virtual std::string fetch(const PaperRecord &paper) const = 0;
};

// Serves the `fulltext` field of fixture records, keyed by lowercase DOI.
class FixtureFullTextProvider final: public FullTextProvider {
public:
  explicit FixtureFullTextProvider(const std::vector<PaperRecord> &papers);

  std::string fetch(const PaperRecord &paper) const override;

private:
  std::map<std::string, std::string> texts_;
};

// Resolves a DOI through an open-access lookup service
// (GET {base}/{doi}?email=..., reading best_oa_location.url_for_pdf), or
// uses pdf_url directly, then downloads the document. PDFs go through
// extract_pdf_text; text/plain bodies are returned as is.
class HttpFullTextProvider final: public FullTextProvider {
public:
  HttpFullTextProvider(HttpEndpoint resolver, std::string email);

  std::string fetch(const PaperRecord &paper) const override;

private:
  HttpEndpoint resolver_;
  std::string email_;
};

// Disk cache keyed by DOI. Writes go to a temporary file that is renamed
// into place.
class FullTextCache {
public:
  explicit FullTextCache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string &doi) const;
  void put(const std::string &doi, const std::string &text) const;
  std::filesystem::path path_for(const std::string &doi) const;

private:
  std::filesystem::path dir_;
};

// Cache-first fetch. Concurrent calls are safe.
class FullTextFetcher {
public:
  FullTextFetcher(const FullTextProvider &provider, FullTextCache cache);

  // Throws kFullTextUnavailable when the paper has neither DOI nor URL.
  std::string fetch(const PaperRecord &paper) const;

  int provider_calls() const { return provider_calls_.load(); }

private:
  const FullTextProvider *provider_;
  FullTextCache cache_;
  mutable std::atomic<int> provider_calls_ = 0;
};

// Case-folded, trimmed DOI.
std::string normalize_doi(std::string_view doi);

}  // namespace synthroute::corpus

#endif  // SYNTHROUTE_CORPUS_FULLTEXT_H_
