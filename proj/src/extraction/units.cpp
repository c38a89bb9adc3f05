//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/extraction/units.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <vector>

#include "synthroute/chem/smiles.h"
#include "synthroute/error.h"

namespace synthroute::extraction {
namespace {

// "4-6", "4 - 6", "4 to 6" and the en dash.
const std::string kNumber = R"((\d+(?:\.\d+)?))";
const std::string kRange =
    kNumber + R"((?:\s*(?:-|\xE2\x80\x93|to)\s*)" + kNumber + ")?";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c: out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

ParsedQuantity from_range(const std::smatch &m) {
  const double a = std::stod(m[1].str());
  if (!m[2].matched) {
    return { a, false };
  }
  return { 0.5 * (a + std::stod(m[2].str())), true };
}

double unit_hours(const std::string &unit) {
  switch (unit.front()) {
  case 'w': return 168.0;
  case 'd': return 24.0;
  case 'h': return 1.0;
  case 'm': return 1.0 / 60.0;
  default: return 1.0 / 3600.0;  // seconds
  }
}

std::string trim(std::string_view s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) {
    return {};
  }
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

}  // namespace

std::optional<ParsedQuantity> parse_yield(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s.empty()) {
    return std::nullopt;
  }
  if (s.starts_with("quant")) {
    return ParsedQuantity { 1.0, true };
  }

  std::optional<ParsedQuantity> q;
  static const std::regex percent(kRange + R"(\s*%)");
  static const std::regex bare("^" + kRange + "$");
  std::smatch m;
  if (std::regex_search(s, m, percent)) {
    q = from_range(m);
    q->value /= 100.0;
  } else if (std::regex_match(s, m, bare)) {
    q = from_range(m);
    if (q->value > 1.0) {
      q->value /= 100.0;
    }
  }
  if (!q || !(q->value > 0.0) || q->value > 1.0) {
    return std::nullopt;
  }
  return q;
}

std::optional<ParsedQuantity> parse_duration(std::string_view text) {
  const std::string s = lower(text);
  static const std::regex duration(
      kRange
      + R"(\s*(weeks?|wks?|days?|d|hours?|hrs?|h|minutes?|mins?|m|seconds?|secs?|s)\b)");
  static const std::regex joiner(R"(^\s*(?:and|,)?\s*$)");

  std::optional<ParsedQuantity> total;
  std::size_t last_end = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), duration);
       it != std::sregex_iterator(); ++it) {
    const std::smatch &m = *it;
    const auto start = static_cast<std::size_t>(m.position(0));
    if (total && !std::regex_match(s.substr(last_end, start - last_end), joiner)) {
      break;
    }
    ParsedQuantity part = from_range(m);
    part.value *= unit_hours(m[3].str());
    if (!total) {
      total = part;
    } else {
      total->value += part.value;
      total->approximate = total->approximate || part.approximate;
    }
    last_end = start + static_cast<std::size_t>(m.length(0));
  }
  if (!total && s.find("overnight") != std::string::npos) {
    total = ParsedQuantity { 12.0, true };
  }
  return total;
}

route::ReactionRecord to_reaction_record(const ExtractionResult &result,
                                         const std::string &reactant_smiles,
                                         const std::string &source_doi,
                                         const ManualEdits &edits) {
  if (result.status != ExtractionStatus::kFound) {
    throw Error(ErrorCode::kInvalidArgument,
                "the extraction did not find the reaction");
  }
  auto field = [&result](const std::string &key) -> std::string {
    const auto it = result.fields.find(key);
    return it == result.fields.end() ? std::string {}
                                     : it->second.value_or(std::string {});
  };

  std::vector<std::string> failed;
  std::optional<chem::Molecule> product;
  std::string product_text = edits.product_smiles.value_or(field("products"));
  product_text = trim(product_text.substr(0, product_text.find_first_of(";,")));
  try {
    if (!product_text.empty()) {
      product = chem::parse_smiles(product_text);
    }
  } catch (const Error &) {
    // Reported below.
  }
  if (!product) {
    failed.emplace_back("products");
  }

  std::optional<double> yield = edits.yield;
  if (!yield) {
    if (const auto q = parse_yield(field("yield"))) {
      yield = q->value;
    } else {
      failed.emplace_back("yield");
    }
  }
  std::optional<double> duration = edits.duration_hours;
  if (!duration) {
    if (const auto q = parse_duration(field("duration"))) {
      duration = q->value;
    } else {
      failed.emplace_back("duration");
    }
  }
  if (!failed.empty()) {
    std::string names;
    for (const std::string &f: failed) {
      names += (names.empty() ? "" : ", ") + f;
    }
    throw Error(ErrorCode::kManualEditRequired,
                "cannot convert extracted " + names + "; edit them manually");
  }

  route::ReactionConditions cond;
  if (edits.conditions) {
    cond = *edits.conditions;
  } else {
    cond.solvent = field("solvent");
    cond.reagent = field("reagent");
    cond.catalysts = field("catalysts");
    cond.instruments = field("instruments");
    cond.operation = field("operation");
    cond.purification = field("purification");
  }
  route::ReactionRecord record(chem::parse_smiles(reactant_smiles),
                               std::move(*product), *yield, *duration,
                               std::move(cond), source_doi);
  record.set_context_relevancy(result.context_relevancy);
  return record;
}

}  // namespace synthroute::extraction
