//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/extraction/extract.h"

#include <algorithm>
#include <cmath>

#include "synthroute/error.h"
#include "synthroute/extraction/prompt.h"

namespace synthroute::extraction {
namespace {

std::string_view trim(std::string_view s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) {
    return {};
  }
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string_view strip_fence(std::string_view s) {
  s = trim(s);
  if (!s.starts_with("```") || !s.ends_with("```") || s.size() < 6) {
    return s;
  }
  s.remove_suffix(3);
  const std::size_t eol = s.find('\n');
  if (eol == std::string_view::npos) {
    return {};
  }
  return trim(s.substr(eol + 1));
}

std::optional<std::string> field_text(const nlohmann::json &v) {
  if (v.is_null()) {
    return std::nullopt;
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "null") {
      return std::nullopt;
    }
    return s;
  }
  if (v.is_array()) {
    std::string out;
    for (const auto &e: v) {
      const auto t = field_text(e);
      if (!t) {
        continue;
      }
      if (!out.empty()) {
        out += "; ";
      }
      out += *t;
    }
    if (out.empty()) {
      return std::nullopt;
    }
    return out;
  }
  return v.dump();
}

enum class Parsed { kObject, kNull, kMalformed };

Parsed parse_answer(std::string_view answer, nlohmann::json &out) {
  const std::string_view body = strip_fence(answer);
  if (body == "null" || body == "\"null\"") {
    return Parsed::kNull;
  }
  out = nlohmann::json::parse(body, nullptr, false);
  if (out.is_discarded() || !out.is_object()) {
    return Parsed::kMalformed;
  }
  return Parsed::kObject;
}

// The answer's field values, for relevancy scoring.
std::string answer_text(const ExtractionResult &r) {
  std::string s;
  for (const std::string_view key: kRequiredKeys) {
    const auto &v = r.fields.at(std::string(key));
    if (v && !v->empty()) {
      if (!s.empty()) {
        s += ". ";
      }
      s += *v;
    }
  }
  return s;
}

}  // namespace

std::string to_string(ExtractionStatus s) {
  return s == ExtractionStatus::kFound ? "found" : "not_found";
}

nlohmann::json to_json(const ExtractionResult &r) {
  nlohmann::json fields = nlohmann::json::object();
  for (const auto &[k, v]: r.fields) {
    fields[k] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  }
  return {
    { "status", to_string(r.status) },
    { "fields", fields },
    { "missing_keys", r.missing_keys },
    { "attempts", r.attempts },
    { "context_relevancy", r.context_relevancy },
    { "source_paragraphs", r.source_paragraphs },
    { "raw_answer", r.raw_answer },
  };
}

ExtractionResult extraction_from_json(const nlohmann::json &j) {
  try {
    ExtractionResult r;
    const std::string status = j.at("status").get<std::string>();
    if (status == "found") {
      r.status = ExtractionStatus::kFound;
    } else if (status == "not_found") {
      r.status = ExtractionStatus::kNotFound;
    } else {
      throw Error(ErrorCode::kBadRequest, "unknown status '" + status + "'");
    }
    for (const auto &[k, v]: j.at("fields").items()) {
      r.fields[k] = v.is_null() ? std::nullopt
                                : std::optional(v.get<std::string>());
    }
    r.missing_keys = j.value("missing_keys", std::vector<std::string> {});
    r.attempts = j.at("attempts").get<int>();
    r.context_relevancy = j.value("context_relevancy", 0.0);
    r.source_paragraphs =
        j.value("source_paragraphs", std::vector<std::string> {});
    r.raw_answer = j.value("raw_answer", "");
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kBadRequest,
                std::string("malformed extraction: ") + e.what());
  }
}

ExtractionResult extract_reaction(std::string_view document,
                                  const std::string &reactant,
                                  const std::string &expected_reaction,
                                  const ChatProvider &chat,
                                  const projection::EmbeddingProvider &embedder,
                                  const ExtractionOptions &options) {
  if (options.max_retries < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_retries must be >= 0");
  }
  const std::vector<std::string> paragraphs = chunk_document(document);
  const std::string query = reactant + " " + expected_reaction;
  std::vector<std::string> context;
  for (auto &p: retrieve_relevant(paragraphs, query, embedder, options.top_k)) {
    context.push_back(std::move(p.text));
  }
  const std::string prompt = build_prompt(reactant, expected_reaction, context);

  ExtractionResult r;
  r.source_paragraphs = context;
  for (int attempt = 1; attempt <= options.max_retries + 1; ++attempt) {
    std::string content = prompt;
    if (attempt > 1) {
      content += "\n";
      content += kStrictnessDirective;
      content += "\n";
    }
    r.attempts = attempt;
    r.raw_answer = chat.complete({ { "user", content } });

    nlohmann::json obj;
    const Parsed parsed = parse_answer(r.raw_answer, obj);
    if (parsed == Parsed::kMalformed) {
      continue;
    }
    r.fields.clear();
    for (const std::string_view key: kRequiredKeys) {
      r.fields[std::string(key)] = std::nullopt;
    }
    if (parsed == Parsed::kNull) {
      r.status = ExtractionStatus::kNotFound;
      return r;
    }
    r.status = ExtractionStatus::kFound;
    for (const std::string_view key: kRequiredKeys) {
      const std::string k(key);
      if (!obj.contains(k)) {
        r.missing_keys.push_back(k);
        continue;
      }
      r.fields[k] = field_text(obj[k]);
    }
    if (obj.contains("purification")) {
      r.fields["purification"] = field_text(obj["purification"]);
    }
    const std::string text = answer_text(r);
    if (!text.empty() && !context.empty()) {
      try {
        r.context_relevancy = context_relevancy(
            text, context, embedder, options.relevancy_threshold);
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kEmptyContext) {
          throw;
        }
      }
    }
    return r;
  }
  throw Error(ErrorCode::kMalformedAfterRetries,
              "no valid JSON answer after " + std::to_string(r.attempts)
                  + " attempts");
}

double context_relevancy(const std::string &answer,
                         std::span<const std::string> context,
                         const projection::EmbeddingProvider &embedder,
                         double tau) {
  std::vector<std::string> texts { answer };
  for (const std::string &c: context) {
    for (std::string &s: split_sentences(c)) {
      texts.push_back(std::move(s));
    }
  }
  const std::size_t n = texts.size() - 1;
  if (n == 0) {
    throw Error(ErrorCode::kEmptyContext, "context has no sentences");
  }
  const auto vecs = embedder.embed_batch(texts);
  std::size_t hits = 0;
  for (std::size_t i = 1; i < vecs.size(); ++i) {
    if (projection::cosine(vecs[0], vecs[i]) >= tau) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

RelevancyStats relevancy_stats(std::span<const double> history) {
  if (history.empty()) {
    throw Error(ErrorCode::kEmptyHistory, "relevancy history is empty");
  }
  RelevancyStats s;
  s.history.assign(history.begin(), history.end());
  double sum = 0.0;
  for (double v: history) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "relevancy values must lie in [0, 1]");
    }
    sum += v;
  }
  s.mean = sum / static_cast<double>(history.size());

  std::vector<double> sorted(history.begin(), history.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&sorted](double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  s.q1 = quantile(0.25);
  s.q3 = quantile(0.75);
  return s;
}

std::optional<DifficultyRecommendation>
recommend_difficulty(const std::string &operation,
                     std::span<const AnnotatedOperation> history,
                     const projection::EmbeddingProvider &embedder,
                     double threshold) {
  if (history.empty()
      || operation.find_first_not_of(" \t\r\n") == std::string::npos) {
    return std::nullopt;
  }
  std::vector<std::string> texts { operation };
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (history[i].operation.find_first_not_of(" \t\r\n")
        != std::string::npos) {
      texts.push_back(history[i].operation);
      index.push_back(i);
    }
  }
  if (index.empty()) {
    return std::nullopt;
  }
  const auto vecs = embedder.embed_batch(texts);
  std::optional<DifficultyRecommendation> best;
  for (std::size_t k = 0; k < index.size(); ++k) {
    const double sim = projection::cosine(vecs[0], vecs[k + 1]);
    if (!best || sim > best->similarity) {
      best = DifficultyRecommendation { history[index[k]].annotation, sim,
                                        index[k] };
    }
  }
  if (best->similarity < threshold) {
    return std::nullopt;
  }
  return best;
}

}  // namespace synthroute::extraction
