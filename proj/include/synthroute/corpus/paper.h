//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CORPUS_PAPER_H_
#define SYNTHROUTE_CORPUS_PAPER_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace synthroute::corpus {

struct PaperRecord {
  std::string id;
  std::string title;
  std::string abstract;
  std::string doi;
  int citation_count = 0;
  std::vector<std::string> keywords;
  std::optional<std::string> pdf_url;
  int retrieval_rank = 1;
  // Offline fixtures may carry the document text inline.
  std::optional<std::string> fulltext;

  // Text used for embeddings: title and abstract.
  std::string embedding_text() const;

  friend bool operator==(const PaperRecord &, const PaperRecord &) = default;
};

// Field names follow the corpus fixture format. from_json throws
// Error(kBadRequest) on missing id/title or negative citation counts.
nlohmann::json to_json(const PaperRecord &p);
PaperRecord paper_from_json(const nlohmann::json &j);

}  // namespace synthroute::corpus

#endif  // SYNTHROUTE_CORPUS_PAPER_H_
