//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EVAL_HARNESS_H_
#define SYNTHROUTE_EVAL_HARNESS_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthroute/extraction/extract.h"

namespace synthroute::eval {

inline constexpr double kYieldTolerance = 0.005;

struct ReactionTriple {
  std::vector<std::string> reactants;  // SMILES
  std::vector<std::string> products;   // SMILES
  double yield = 0.0;
};

// One paper's reactions, either expert annotations or a tool's output.
struct PaperReactions {
  std::string paper_id;
  std::vector<ReactionTriple> reactions;
};

struct MatchOutcome {
  bool matched = false;
  // Some SMILES in either triple failed to parse.
  bool unparseable = false;
};

// Reactant sets and product sets equal under chem::same_molecule and
// |yield difference| <= 0.005.
MatchOutcome match_extraction(const ReactionTriple &pred,
                              const ReactionTriple &gold);

struct EvalMetrics {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Fills the ratios; a zero denominator gives 0.
EvalMetrics metrics_from_counts(int tp, int fp, int fn);

struct EvalReport {
  EvalMetrics metrics;
  // Predictions involving a SMILES that did not parse.
  int unparseable = 0;
};

// Per paper, predictions and golds are sorted by a canonical key and
// matched greedily one-to-one; leftover predictions are false positives,
// leftover golds false negatives. Papers present on one side only count
// entirely as FP or FN.
EvalReport evaluate(std::span<const PaperReactions> predictions,
                    std::span<const PaperReactions> gold);

// One {"paper_id", "reactions": [{"reactants", "products", "yield"}]} per
// line. Gold files need at least one reaction per paper and yields in
// (0, 1]. Throws kIoError or kBadRequest.
std::vector<PaperReactions> load_reactions_jsonl(const std::filesystem::path &path,
                                                 bool gold);

nlohmann::json to_json(const PaperReactions &p);

// The prediction for one extraction: reactants and products split on ';'
// or ','; an unparseable yield becomes NaN and never matches.
ReactionTriple prediction_from_extraction(const extraction::ExtractionResult &r);

struct ReportRow {
  std::string tool;
  EvalMetrics metrics;
};

// Columns tool, precision, recall, f1 to three decimals.
std::string format_report_text(std::span<const ReportRow> rows);
nlohmann::json format_report_json(std::span<const ReportRow> rows);

}  // namespace synthroute::eval

#endif  // SYNTHROUTE_EVAL_HARNESS_H_
