//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EXTRACTION_UNITS_H_
#define SYNTHROUTE_EXTRACTION_UNITS_H_

#include <optional>
#include <string>
#include <string_view>

#include "synthroute/extraction/extract.h"
#include "synthroute/route/reaction.h"

namespace synthroute::extraction {

struct ParsedQuantity {
  double value = 0.0;
  // Set for ranges, "overnight" and "quantitative".
  bool approximate = false;
};

// "82%", "82 %", "0.82", "82", "80-85%" (midpoint), "quantitative" (1.0).
// Values are fractions in (0, 1]; anything else is nullopt.
std::optional<ParsedQuantity> parse_yield(std::string_view text);

// Hours from "3 h", "30 min", "2 days", "1.5 hours", "2 h 30 min",
// "45 s", "1 week", "4-6 h" (midpoint) and "overnight" (12 h). The first
// duration in a longer phrase is used.
std::optional<ParsedQuantity> parse_duration(std::string_view text);

// Values a user typed into the edit form; each overrides the extracted text.
struct ManualEdits {
  std::optional<std::string> product_smiles;
  std::optional<double> yield;
  std::optional<double> duration_hours;
  std::optional<route::ReactionConditions> conditions;
};

// Builds a tree-ready record. The reactant is the query SMILES; the product
// is the first "products" entry, which must parse as SMILES. Throws
// kManualEditRequired naming every field that could not be converted, and
// kInvalidArgument for a not_found result.
route::ReactionRecord to_reaction_record(const ExtractionResult &result,
                                         const std::string &reactant_smiles,
                                         const std::string &source_doi,
                                         const ManualEdits &edits = {});

}  // namespace synthroute::extraction

#endif  // SYNTHROUTE_EXTRACTION_UNITS_H_
