//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_WORKSPACE_H_
#define SYNTHROUTE_SERVICE_WORKSPACE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthroute/corpus/paper.h"
#include "synthroute/extraction/extract.h"
#include "synthroute/projection/project.h"
#include "synthroute/rank/ranking.h"
#include "synthroute/route/tree.h"

namespace synthroute::service {

inline constexpr int kSchemaVersion = 1;

enum class SearchStatus { kPending, kDone, kFailed };

std::string to_string(SearchStatus s);

struct StoredExtraction {
  std::string paper_id;
  std::string reactant;
  std::string expected_reaction;
  extraction::ExtractionResult result;
};

struct Workspace {
  Workspace(std::string id, std::string starting_smiles,
            std::vector<std::string> expected_reactions);

  int schema_version = kSchemaVersion;
  std::string id;
  std::string starting_smiles;
  std::vector<std::string> expected_reactions;

  SearchStatus search_status = SearchStatus::kPending;
  std::string search_error;
  // Ranked corpus snapshot without inline full text, and one relevance score
  // per paper.
  std::vector<corpus::PaperRecord> papers;
  std::vector<double> relevance;

  // Layouts computed so far, one per (perplexity, seed).
  std::vector<projection::ProjectionLayout> projections;

  route::RouteTree tree;
  rank::CriteriaWeights weights;

  std::vector<double> relevancy_history;
  std::vector<extraction::AnnotatedOperation> annotations;
  std::map<std::string, StoredExtraction> extractions;

  const corpus::PaperRecord *find_paper(const std::string &paper_id) const;
  const projection::ProjectionLayout *find_projection(double perplexity,
                                                      std::uint64_t seed) const;
};

nlohmann::json to_json(const route::RouteTree &tree);
nlohmann::json to_json(const projection::ProjectionLayout &layout);
nlohmann::json to_json(const Workspace &ws);

// Throws kUnsupportedSchema for a version newer than kSchemaVersion and
// kBadRequest for malformed documents. Older versions pass through
// migrate() first.
Workspace workspace_from_json(const nlohmann::json &j);

// Upgrades a document in place to kSchemaVersion. Version 1 is the first
// released layout, so there is nothing to do yet.
void migrate(nlohmann::json &j);

// Canonical file bytes: two-space indented JSON plus a trailing newline.
std::string serialize(const Workspace &ws);
Workspace deserialize(const std::string &bytes);

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_WORKSPACE_H_
