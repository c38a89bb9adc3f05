//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CORPUS_LITERATURE_H_
#define SYNTHROUTE_CORPUS_LITERATURE_H_

#include <atomic>
#include <filesystem>
#include <string>
#include <vector>

#include "synthroute/corpus/paper.h"
#include "synthroute/http_client.h"

namespace synthroute::corpus {

inline constexpr int kDefaultSearchLimit = 100;

// Reads one PaperRecord per non-blank line. Throws kIoError when the file
// cannot be opened and kBadRequest (with the line number) on a bad record.
std::vector<PaperRecord> load_papers_jsonl(const std::filesystem::path &path);

class LiteratureProvider {
public:
  virtual ~LiteratureProvider() = default;

  // Raw provider response in provider order; may contain duplicates and
  // more than `limit` records.
  virtual std::vector<PaperRecord> search(const std::string &query,
                                          int limit) const = 0;
};

// Offline provider: every query returns the loaded corpus in file order.
class FixtureLiteratureProvider final: public LiteratureProvider {
public:
  explicit FixtureLiteratureProvider(std::vector<PaperRecord> papers);
  explicit FixtureLiteratureProvider(const std::filesystem::path &path);

  std::vector<PaperRecord> search(const std::string &query,
                                  int limit) const override;

  int calls() const { return calls_.load(); }

private:
  std::vector<PaperRecord> papers_;
  mutable std::atomic<int> calls_ = 0;
};

// GET {base}/search?term=<query>&limit=<n>, answering either a JSON array
// of records or {"results": [...]}.
class HttpLiteratureProvider final: public LiteratureProvider {
public:
  explicit HttpLiteratureProvider(HttpEndpoint endpoint);

  std::vector<PaperRecord> search(const std::string &query,
                                  int limit) const override;

private:
  HttpEndpoint endpoint_;
};

struct SearchOutcome {
  std::vector<PaperRecord> papers;
  bool no_results = false;
};

// Validates the query as SMILES, then keeps the first record of every DOI
// (case-insensitive; records without a DOI are kept), truncates to `limit`
// and assigns retrieval ranks 1..k. Parser errors propagate.
SearchOutcome search_papers(const LiteratureProvider &provider,
                            const std::string &smiles,
                            int limit = kDefaultSearchLimit);

}  // namespace synthroute::corpus

#endif  // SYNTHROUTE_CORPUS_LITERATURE_H_
