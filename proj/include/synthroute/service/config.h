//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_CONFIG_H_
#define SYNTHROUTE_SERVICE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "synthroute/corpus/fulltext.h"
#include "synthroute/corpus/literature.h"
#include "synthroute/extraction/chat.h"
#include "synthroute/projection/embedding.h"

namespace synthroute::service {

// Provider selection and storage settings. Read from an INI file:
//
//   [service]     data_dir, workers, seed, search_limit, max_retries
//   [literature]  provider = fixture | http; path | url, token
//   [fulltext]    provider = fixture | http; url, email, cache_dir
//   [embedding]   provider = trigram | http; dim | url, model, token
//   [chat]        provider = mock | http; script | url, model, token
//
// Relative paths resolve against the file's directory. The environment
// variables SYNTHROUTE_LITERATURE_TOKEN, SYNTHROUTE_EMBEDDING_TOKEN and
// SYNTHROUTE_CHAT_TOKEN override the matching tokens.
struct ServiceConfig {
  std::filesystem::path data_dir = "synthroute-data";
  int workers = 4;
  std::uint64_t seed = 42;
  int search_limit = corpus::kDefaultSearchLimit;
  int max_retries = 3;

  std::string literature_provider = "fixture";
  std::filesystem::path literature_path;
  std::string literature_url;
  std::string literature_token;

  std::string fulltext_provider = "fixture";
  std::string fulltext_url = "https://api.unpaywall.org/v2";
  std::string fulltext_email;
  std::filesystem::path fulltext_cache_dir;  // default: data_dir/fulltext

  std::string embedding_provider = "trigram";
  int embedding_dim = projection::kDefaultEmbeddingDim;
  std::string embedding_url;
  std::string embedding_model;
  std::string embedding_token;

  std::string chat_provider = "mock";
  std::filesystem::path chat_script;
  std::string chat_url;
  std::string chat_model;
  std::string chat_token;
};

// Throws kIoError for an unreadable file, kBadRequest for bad syntax or
// values.
ServiceConfig load_config(const std::filesystem::path &path);
ServiceConfig parse_config(std::string_view ini,
                           const std::filesystem::path &base_dir);

using EnvLookup = std::function<const char *(const char *)>;
void apply_env_overrides(ServiceConfig &config, const EnvLookup &getenv_fn);

using EmbedderFactory = std::function<std::unique_ptr<projection::EmbeddingProvider>(
    std::span<const std::string> corpus)>;

struct Providers {
  std::shared_ptr<const corpus::LiteratureProvider> literature;
  std::shared_ptr<const corpus::FullTextProvider> fulltext;
  std::shared_ptr<const extraction::ChatProvider> chat;
  // One embedder per operation; offline embedders are fitted on `corpus`.
  EmbedderFactory embedder;
};

// Throws kBadRequest for an unknown provider name or a missing setting.
Providers make_providers(const ServiceConfig &config);

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_CONFIG_H_
