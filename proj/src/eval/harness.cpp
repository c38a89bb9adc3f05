//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/eval/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>

#include "synthroute/chem/similarity.h"
#include "synthroute/chem/smiles.h"
#include "synthroute/error.h"
#include "synthroute/extraction/units.h"

namespace synthroute::eval {
namespace {

struct Prepared {
  std::vector<chem::Molecule> reactants;
  std::vector<chem::Molecule> products;
  double yield = 0.0;
  bool ok = true;
  std::string sort_key;
};

std::optional<std::vector<chem::Molecule>>
parse_all(const std::vector<std::string> &smiles) {
  std::vector<chem::Molecule> out;
  out.reserve(smiles.size());
  try {
    for (const std::string &s: smiles) {
      out.push_back(chem::parse_smiles(s));
    }
  } catch (const Error &) {
    return std::nullopt;
  }
  return out;
}

std::string side_key(const std::vector<std::string> &smiles,
                     const std::optional<std::vector<chem::Molecule>> &mols) {
  std::vector<std::string> parts;
  if (mols) {
    for (const chem::Molecule &m: *mols) {
      parts.push_back(chem::canonical_key(m).hex());
    }
  } else {
    for (const std::string &s: smiles) {
      parts.push_back("!" + s);
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string &p: parts) {
    key += p + ",";
  }
  return key;
}

Prepared prepare(const ReactionTriple &t) {
  Prepared p;
  auto r = parse_all(t.reactants);
  auto q = parse_all(t.products);
  p.ok = r.has_value() && q.has_value();
  p.yield = t.yield;
  char y[32];
  std::snprintf(y, sizeof(y), "%.9f", t.yield);
  p.sort_key = side_key(t.reactants, r) + ">" + side_key(t.products, q) + ">" + y;
  // Raw spellings break remaining ties so the order is total.
  for (const auto &s: t.reactants) {
    p.sort_key += "|" + s;
  }
  for (const auto &s: t.products) {
    p.sort_key += "|" + s;
  }
  if (r) {
    p.reactants = std::move(*r);
  }
  if (q) {
    p.products = std::move(*q);
  }
  return p;
}

bool same_set(const std::vector<chem::Molecule> &a,
              const std::vector<chem::Molecule> &b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<bool> used(b.size(), false);
  for (const chem::Molecule &m: a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && chem::same_molecule(m, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

MatchOutcome match_prepared(const Prepared &pred, const Prepared &gold) {
  if (!pred.ok || !gold.ok) {
    return { false, true };
  }
  const bool yield_ok = std::abs(pred.yield - gold.yield) <= kYieldTolerance + 1e-12;
  return { yield_ok && same_set(pred.reactants, gold.reactants)
               && same_set(pred.products, gold.products),
           false };
}

std::vector<Prepared> prepare_sorted(const std::vector<ReactionTriple> &ts) {
  std::vector<Prepared> out;
  out.reserve(ts.size());
  for (const ReactionTriple &t: ts) {
    out.push_back(prepare(t));
  }
  std::sort(out.begin(), out.end(), [](const Prepared &a, const Prepared &b) {
    return a.sort_key < b.sort_key;
  });
  return out;
}

std::vector<std::string> split_list(const std::optional<std::string> &text) {
  std::vector<std::string> out;
  if (!text) {
    return out;
  }
  std::size_t start = 0;
  while (start <= text->size()) {
    const std::size_t end = text->find_first_of(";,", start);
    const std::string part = text->substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    const std::size_t a = part.find_first_not_of(" \t\r\n");
    if (a != std::string::npos) {
      const std::size_t b = part.find_last_not_of(" \t\r\n");
      out.push_back(part.substr(a, b - a + 1));
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

MatchOutcome match_extraction(const ReactionTriple &pred,
                              const ReactionTriple &gold) {
  return match_prepared(prepare(pred), prepare(gold));
}

EvalMetrics metrics_from_counts(int tp, int fp, int fn) {
  EvalMetrics m { tp, fp, fn, 0.0, 0.0, 0.0 };
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

EvalReport evaluate(std::span<const PaperReactions> predictions,
                    std::span<const PaperReactions> gold) {
  std::map<std::string, std::pair<std::vector<ReactionTriple>,
                                  std::vector<ReactionTriple>>>
      papers;
  for (const PaperReactions &p: predictions) {
    auto &slot = papers[p.paper_id].first;
    slot.insert(slot.end(), p.reactions.begin(), p.reactions.end());
  }
  for (const PaperReactions &g: gold) {
    auto &slot = papers[g.paper_id].second;
    slot.insert(slot.end(), g.reactions.begin(), g.reactions.end());
  }

  int tp = 0;
  int fp = 0;
  int fn = 0;
  EvalReport report;
  for (const auto &[id, sides]: papers) {
    const std::vector<Prepared> preds = prepare_sorted(sides.first);
    const std::vector<Prepared> golds = prepare_sorted(sides.second);
    std::vector<bool> consumed(golds.size(), false);
    for (const Prepared &p: preds) {
      if (!p.ok) {
        ++report.unparseable;
      }
      bool hit = false;
      for (std::size_t g = 0; g < golds.size() && !hit; ++g) {
        if (!consumed[g] && match_prepared(p, golds[g]).matched) {
          consumed[g] = true;
          hit = true;
        }
      }
      hit ? ++tp : ++fp;
    }
    fn += static_cast<int>(std::count(consumed.begin(), consumed.end(), false));
  }
  report.metrics = metrics_from_counts(tp, fp, fn);
  return report;
}

std::vector<PaperReactions> load_reactions_jsonl(const std::filesystem::path &path,
                                                 bool gold) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::vector<PaperReactions> out;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const std::string where = path.filename().string() + ":" + std::to_string(line_no);
    try {
      const auto j = nlohmann::json::parse(line);
      PaperReactions p;
      p.paper_id = j.at("paper_id").get<std::string>();
      for (const auto &r: j.at("reactions")) {
        ReactionTriple t;
        t.reactants = r.at("reactants").get<std::vector<std::string>>();
        t.products = r.at("products").get<std::vector<std::string>>();
        t.yield = r.at("yield").get<double>();
        if (gold && !(t.yield > 0.0 && t.yield <= 1.0)) {
          throw Error(ErrorCode::kBadRequest,
                      where + ": gold yield must lie in (0, 1]");
        }
        p.reactions.push_back(std::move(t));
      }
      if (gold && p.reactions.empty()) {
        throw Error(ErrorCode::kBadRequest,
                    where + ": annotated paper has no reaction");
      }
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kBadRequest, where + ": " + e.what());
    }
  }
  return out;
}

nlohmann::json to_json(const PaperReactions &p) {
  nlohmann::json rs = nlohmann::json::array();
  for (const ReactionTriple &t: p.reactions) {
    rs.push_back({ { "reactants", t.reactants },
                   { "products", t.products },
                   { "yield", t.yield } });
  }
  return { { "paper_id", p.paper_id }, { "reactions", rs } };
}

ReactionTriple prediction_from_extraction(const extraction::ExtractionResult &r) {
  ReactionTriple t;
  auto field = [&r](const char *key) -> std::optional<std::string> {
    const auto it = r.fields.find(key);
    return it == r.fields.end() ? std::nullopt : it->second;
  };
  t.reactants = split_list(field("reactants"));
  t.products = split_list(field("products"));
  const auto y = field("yield");
  const auto q = y ? extraction::parse_yield(*y) : std::nullopt;
  t.yield = q ? q->value : std::nan("");
  return t;
}

std::string format_report_text(std::span<const ReportRow> rows) {
  std::size_t width = 4;
  for (const ReportRow &r: rows) {
    width = std::max(width, r.tool.size());
  }
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-*s  %9s  %6s  %6s\n",
                static_cast<int>(width), "tool", "precision", "recall", "f1");
  out += buf;
  for (const ReportRow &r: rows) {
    std::snprintf(buf, sizeof(buf), "%-*s  %9.3f  %6.3f  %6.3f\n",
                  static_cast<int>(width), r.tool.c_str(), r.metrics.precision,
                  r.metrics.recall, r.metrics.f1);
    out += buf;
  }
  return out;
}

nlohmann::json format_report_json(std::span<const ReportRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ReportRow &r: rows) {
    out.push_back({ { "tool", r.tool },
                    { "precision", r.metrics.precision },
                    { "recall", r.metrics.recall },
                    { "f1", r.metrics.f1 },
                    { "tp", r.metrics.tp },
                    { "fp", r.metrics.fp },
                    { "fn", r.metrics.fn } });
  }
  return out;
}

}  // namespace synthroute::eval
