//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/config.h"

#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "synthroute/error.h"
#include "synthroute/service/store.h"

namespace synthroute::service {
namespace {

namespace pt = boost::property_tree;

std::filesystem::path resolve(const std::filesystem::path &base,
                              const std::string &value) {
  if (value.empty()) {
    return {};
  }
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

void require(bool ok, const std::string &what) {
  if (!ok) {
    throw Error(ErrorCode::kBadRequest, "config: " + what);
  }
}

// Like ptree::get with a default, but a present value that does not convert
// is an error rather than a silent fallback.
template <typename T>
T value_or(const pt::ptree &tree, const char *key, T fallback) {
  if (!tree.get_optional<std::string>(key)) {
    return fallback;
  }
  return tree.get<T>(key);
}

}  // namespace

ServiceConfig parse_config(std::string_view ini,
                           const std::filesystem::path &base_dir) {
  pt::ptree tree;
  try {
    std::istringstream in { std::string(ini) };
    pt::read_ini(in, tree);
  } catch (const pt::ptree_error &e) {
    throw Error(ErrorCode::kBadRequest, std::string("config: ") + e.what());
  }

  ServiceConfig c;
  try {
    c.data_dir = resolve(base_dir, value_or(tree, "service.data_dir", c.data_dir.string()));
    c.workers = value_or(tree, "service.workers", c.workers);
    c.seed = value_or(tree, "service.seed", c.seed);
    c.search_limit = value_or(tree, "service.search_limit", c.search_limit);
    c.max_retries = value_or(tree, "service.max_retries", c.max_retries);

    c.literature_provider = value_or(tree, "literature.provider", c.literature_provider);
    c.literature_path = resolve(base_dir, value_or(tree, "literature.path", std::string()));
    c.literature_url = value_or(tree, "literature.url", c.literature_url);
    c.literature_token = value_or(tree, "literature.token", c.literature_token);

    c.fulltext_provider = value_or(tree, "fulltext.provider", c.fulltext_provider);
    c.fulltext_url = value_or(tree, "fulltext.url", c.fulltext_url);
    c.fulltext_email = value_or(tree, "fulltext.email", c.fulltext_email);
    c.fulltext_cache_dir = resolve(base_dir, value_or(tree, "fulltext.cache_dir", std::string()));

    c.embedding_provider = value_or(tree, "embedding.provider", c.embedding_provider);
    c.embedding_dim = value_or(tree, "embedding.dim", c.embedding_dim);
    c.embedding_url = value_or(tree, "embedding.url", c.embedding_url);
    c.embedding_model = value_or(tree, "embedding.model", c.embedding_model);
    c.embedding_token = value_or(tree, "embedding.token", c.embedding_token);

    c.chat_provider = value_or(tree, "chat.provider", c.chat_provider);
    c.chat_script = resolve(base_dir, value_or(tree, "chat.script", std::string()));
    c.chat_url = value_or(tree, "chat.url", c.chat_url);
    c.chat_model = value_or(tree, "chat.model", c.chat_model);
    c.chat_token = value_or(tree, "chat.token", c.chat_token);
  } catch (const pt::ptree_error &e) {
    throw Error(ErrorCode::kBadRequest, std::string("config: ") + e.what());
  }
  require(c.workers >= 1, "service.workers must be >= 1");
  require(c.search_limit >= 1, "service.search_limit must be >= 1");
  require(c.max_retries >= 0, "service.max_retries must be >= 0");
  if (c.fulltext_cache_dir.empty()) {
    c.fulltext_cache_dir = c.data_dir / "fulltext";
  }
  return c;
}

ServiceConfig load_config(const std::filesystem::path &path) {
  ServiceConfig c = parse_config(read_file(path), path.parent_path());
  apply_env_overrides(c, [](const char *name) { return std::getenv(name); });
  return c;
}

void apply_env_overrides(ServiceConfig &config, const EnvLookup &getenv_fn) {
  auto take = [&getenv_fn](const char *name, std::string &slot) {
    const char *v = getenv_fn(name);
    if (v != nullptr && *v != '\0') {
      slot = v;
    }
  };
  take("SYNTHROUTE_LITERATURE_TOKEN", config.literature_token);
  take("SYNTHROUTE_EMBEDDING_TOKEN", config.embedding_token);
  take("SYNTHROUTE_CHAT_TOKEN", config.chat_token);
}

Providers make_providers(const ServiceConfig &c) {
  Providers p;

  std::vector<corpus::PaperRecord> fixture_papers;
  if (c.literature_provider == "fixture") {
    require(!c.literature_path.empty(), "literature.path is required");
    fixture_papers = corpus::load_papers_jsonl(c.literature_path);
    p.literature = std::make_shared<corpus::FixtureLiteratureProvider>(fixture_papers);
  } else if (c.literature_provider == "http") {
    require(!c.literature_url.empty(), "literature.url is required");
    p.literature = std::make_shared<corpus::HttpLiteratureProvider>(
        HttpEndpoint::parse(c.literature_url, c.literature_token));
  } else {
    require(false, "unknown literature provider " + c.literature_provider);
  }

  if (c.fulltext_provider == "fixture") {
    require(c.literature_provider == "fixture",
            "fixture full text needs the fixture literature provider");
    p.fulltext = std::make_shared<corpus::FixtureFullTextProvider>(fixture_papers);
  } else if (c.fulltext_provider == "http") {
    p.fulltext = std::make_shared<corpus::HttpFullTextProvider>(
        HttpEndpoint::parse(c.fulltext_url), c.fulltext_email);
  } else {
    require(false, "unknown fulltext provider " + c.fulltext_provider);
  }

  if (c.embedding_provider == "trigram") {
    require(c.embedding_dim > 0, "embedding.dim must be positive");
    const int dim = c.embedding_dim;
    p.embedder = [dim](std::span<const std::string> corpus) {
      auto e = std::make_unique<projection::TrigramEmbedder>(dim);
      e->fit(corpus);
      return std::unique_ptr<projection::EmbeddingProvider>(std::move(e));
    };
  } else if (c.embedding_provider == "http") {
    require(!c.embedding_url.empty(), "embedding.url is required");
    const HttpEndpoint ep = HttpEndpoint::parse(c.embedding_url, c.embedding_token);
    const std::string model = c.embedding_model;
    p.embedder = [ep, model](std::span<const std::string>) {
      return std::unique_ptr<projection::EmbeddingProvider>(
          std::make_unique<projection::HttpEmbeddingProvider>(ep, model));
    };
  } else {
    require(false, "unknown embedding provider " + c.embedding_provider);
  }

  if (c.chat_provider == "mock") {
    require(!c.chat_script.empty(), "chat.script is required");
    p.chat = std::make_shared<extraction::MockChatProvider>(
        extraction::MockChatProvider::load_script(c.chat_script));
  } else if (c.chat_provider == "http") {
    require(!c.chat_url.empty(), "chat.url is required");
    p.chat = std::make_shared<extraction::HttpChatProvider>(
        HttpEndpoint::parse(c.chat_url, c.chat_token), c.chat_model);
  } else {
    require(false, "unknown chat provider " + c.chat_provider);
  }
  return p;
}

}  // namespace synthroute::service
