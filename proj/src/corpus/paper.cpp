//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/corpus/paper.h"

#include "synthroute/error.h"

namespace synthroute::corpus {

std::string PaperRecord::embedding_text() const {
  if (abstract.empty()) {
    return title;
  }
  return title + "\n" + abstract;
}

nlohmann::json to_json(const PaperRecord &p) {
  nlohmann::json j = {
    { "id", p.id },
    { "title", p.title },
    { "abstract", p.abstract },
    { "doi", p.doi },
    { "citation_count", p.citation_count },
    { "keywords", p.keywords },
    { "retrieval_rank", p.retrieval_rank },
  };
  if (p.pdf_url) {
    j["pdf_url"] = *p.pdf_url;
  }
  if (p.fulltext) {
    j["fulltext"] = *p.fulltext;
  }
  return j;
}

PaperRecord paper_from_json(const nlohmann::json &j) {
  try {
    PaperRecord p;
    p.id = j.at("id").get<std::string>();
    p.title = j.at("title").get<std::string>();
    p.abstract = j.value("abstract", "");
    p.doi = j.value("doi", "");
    p.citation_count = j.value("citation_count", 0);
    p.keywords = j.value("keywords", std::vector<std::string> {});
    if (j.contains("pdf_url") && !j["pdf_url"].is_null()) {
      p.pdf_url = j["pdf_url"].get<std::string>();
    }
    p.retrieval_rank = j.value("retrieval_rank", 1);
    if (j.contains("fulltext") && !j["fulltext"].is_null()) {
      p.fulltext = j["fulltext"].get<std::string>();
    }
    if (p.id.empty()) {
      throw Error(ErrorCode::kBadRequest, "paper id must not be empty");
    }
    if (p.citation_count < 0) {
      throw Error(ErrorCode::kBadRequest,
                  "citation_count must be non-negative for paper " + p.id);
    }
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kBadRequest,
                std::string("malformed paper record: ") + e.what());
  }
}

}  // namespace synthroute::corpus
