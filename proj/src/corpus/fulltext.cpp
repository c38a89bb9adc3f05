//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/corpus/fulltext.h"

#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include "synthroute/corpus/pdf_text.h"
#include "synthroute/error.h"
#include "synthroute/hash.h"

namespace synthroute::corpus {
namespace fs = std::filesystem;

std::string normalize_doi(std::string_view doi) {
  const std::size_t a = doi.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) {
    return {};
  }
  const std::size_t b = doi.find_last_not_of(" \t\r\n");
  std::string out(doi.substr(a, b - a + 1));
  for (char &c: out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

FixtureFullTextProvider::FixtureFullTextProvider(
    const std::vector<PaperRecord> &papers) {
  for (const PaperRecord &p: papers) {
    if (p.fulltext && !p.doi.empty()) {
      texts_.emplace(normalize_doi(p.doi), *p.fulltext);
    }
  }
}

std::string FixtureFullTextProvider::fetch(const PaperRecord &paper) const {
  const auto it = texts_.find(normalize_doi(paper.doi));
  if (it == texts_.end()) {
    throw Error(ErrorCode::kFullTextUnavailable,
                "no fixture full text for DOI '" + paper.doi + "'");
  }
  return it->second;
}

HttpFullTextProvider::HttpFullTextProvider(HttpEndpoint resolver,
                                           std::string email)
    : resolver_(std::move(resolver)), email_(std::move(email)) { }

std::string HttpFullTextProvider::fetch(const PaperRecord &paper) const {
  std::string url = paper.pdf_url.value_or("");
  if (url.empty() && !paper.doi.empty()) {
    const HttpReply r =
        http_get(resolver_, "/" + paper.doi, { { "email", email_ } });
    try {
      const auto j = nlohmann::json::parse(r.body);
      const auto &loc = j.at("best_oa_location");
      if (!loc.is_null() && loc.contains("url_for_pdf")
          && loc["url_for_pdf"].is_string()) {
        url = loc["url_for_pdf"].get<std::string>();
      }
    } catch (const nlohmann::json::exception &) {
      // No usable location.
    }
  }
  if (url.empty()) {
    throw Error(ErrorCode::kFullTextUnavailable,
                "no open-access document for DOI '" + paper.doi + "'");
  }

  HttpEndpoint doc = HttpEndpoint::parse(url);
  doc.timeout_seconds = resolver_.timeout_seconds;
  HttpReply body;
  try {
    body = http_get(doc, "");
  } catch (const Error &e) {
    throw Error(ErrorCode::kFullTextUnavailable,
                "document download failed: " + std::string(e.what()));
  }
  if (body.content_type.starts_with("text/plain")) {
    return body.body;
  }
  return extract_pdf_text(body.body);
}

FullTextCache::FullTextCache(fs::path dir): dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create cache directory " + dir_.string());
  }
}

fs::path FullTextCache::path_for(const std::string &doi) const {
  return dir_ / (fnv1a_hex(normalize_doi(doi)) + ".txt");
}

std::optional<std::string> FullTextCache::get(const std::string &doi) const {
  std::ifstream in(path_for(doi), std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void FullTextCache::put(const std::string &doi, const std::string &text) const {
  static std::atomic<std::uint64_t> counter = 0;
  const fs::path target = path_for(doi);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp."
           << std::hash<std::thread::id> {}(std::this_thread::get_id()) << "."
           << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot rename into " + target.string());
  }
}

FullTextFetcher::FullTextFetcher(const FullTextProvider &provider,
                                 FullTextCache cache)
    : provider_(&provider), cache_(std::move(cache)) { }

std::string FullTextFetcher::fetch(const PaperRecord &paper) const {
  std::string key = normalize_doi(paper.doi);
  if (key.empty()) {
    key = paper.pdf_url.value_or("");
  }
  if (key.empty()) {
    throw Error(ErrorCode::kFullTextUnavailable,
                "paper " + paper.id + " has neither DOI nor URL");
  }
  if (auto hit = cache_.get(key)) {
    return *std::move(hit);
  }
  ++provider_calls_;
  std::string text = provider_->fetch(paper);
  cache_.put(key, text);
  return text;
}

}  // namespace synthroute::corpus
