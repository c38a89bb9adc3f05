//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/corpus/literature.h"

#include <fstream>
#include <set>

#include "synthroute/chem/smiles.h"
#include "synthroute/corpus/fulltext.h"
#include "synthroute/error.h"

namespace synthroute::corpus {

std::vector<PaperRecord> load_papers_jsonl(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::vector<PaperRecord> papers;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      papers.push_back(paper_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kBadRequest, path.filename().string() + ":"
                                              + std::to_string(line_no) + ": "
                                              + e.what());
    } catch (const Error &e) {
      throw Error(e.code(), path.filename().string() + ":"
                                + std::to_string(line_no) + ": " + e.what());
    }
  }
  return papers;
}

FixtureLiteratureProvider::FixtureLiteratureProvider(
    std::vector<PaperRecord> papers)
    : papers_(std::move(papers)) { }

FixtureLiteratureProvider::FixtureLiteratureProvider(
    const std::filesystem::path &path)
    : papers_(load_papers_jsonl(path)) { }

std::vector<PaperRecord>
FixtureLiteratureProvider::search(const std::string & /* query */,
                                  int /* limit */) const {
  ++calls_;
  return papers_;
}

HttpLiteratureProvider::HttpLiteratureProvider(HttpEndpoint endpoint)
    : endpoint_(std::move(endpoint)) { }

std::vector<PaperRecord> HttpLiteratureProvider::search(const std::string &query,
                                                        int limit) const {
  const HttpReply reply = http_get(
      endpoint_, "/search",
      { { "term", query }, { "limit", std::to_string(limit) } });
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(reply.body);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kProviderUnavailable,
                std::string("literature provider sent invalid JSON: ")
                    + e.what());
  }
  const nlohmann::json &rows =
      body.is_object() && body.contains("results") ? body["results"] : body;
  if (!rows.is_array()) {
    throw Error(ErrorCode::kProviderUnavailable,
                "literature provider response has no result list");
  }
  std::vector<PaperRecord> out;
  out.reserve(rows.size());
  for (const auto &row: rows) {
    out.push_back(paper_from_json(row));
  }
  return out;
}

SearchOutcome search_papers(const LiteratureProvider &provider,
                            const std::string &smiles, int limit) {
  if (limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "search limit must be >= 1");
  }
  chem::parse_smiles(smiles);

  SearchOutcome outcome;
  std::set<std::string> seen;
  for (PaperRecord &p: provider.search(smiles, limit)) {
    if (static_cast<int>(outcome.papers.size()) == limit) {
      break;
    }
    if (!p.doi.empty() && !seen.insert(normalize_doi(p.doi)).second) {
      continue;
    }
    p.retrieval_rank = static_cast<int>(outcome.papers.size()) + 1;
    outcome.papers.push_back(std::move(p));
  }
  outcome.no_results = outcome.papers.empty();
  return outcome;
}

}  // namespace synthroute::corpus
