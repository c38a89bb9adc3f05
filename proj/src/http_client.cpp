//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/http_client.h"

#include <httplib.h>

#include "synthroute/error.h"

namespace synthroute {
namespace {

httplib::Client make_client(const HttpEndpoint &ep) {
  httplib::Client cli(ep.origin);
  cli.set_connection_timeout(ep.timeout_seconds, 0);
  cli.set_read_timeout(ep.timeout_seconds, 0);
  cli.set_follow_location(true);
  if (!ep.bearer_token.empty()) {
    cli.set_bearer_token_auth(ep.bearer_token);
  }
  return cli;
}

[[noreturn]] void unavailable(const HttpEndpoint &ep, const std::string &path,
                              const std::string &why) {
  throw Error(ErrorCode::kProviderUnavailable,
              ep.origin + ep.path_prefix + path + ": " + why);
}

std::string target(const HttpEndpoint &ep, const std::string &path) {
  const std::string t = ep.path_prefix + path;
  return t.empty() ? "/" : t;
}

}  // namespace

HttpEndpoint HttpEndpoint::parse(const std::string &base_url,
                                 std::string bearer_token) {
  HttpEndpoint ep;
  ep.bearer_token = std::move(bearer_token);
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "base URL needs a scheme: " + base_url);
  }
  const auto path_start = base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    ep.origin = base_url;
  } else {
    ep.origin = base_url.substr(0, path_start);
    ep.path_prefix = base_url.substr(path_start);
    while (!ep.path_prefix.empty() && ep.path_prefix.back() == '/') {
      ep.path_prefix.pop_back();
    }
  }
  return ep;
}

HttpReply http_get(const HttpEndpoint &ep, const std::string &path,
                   const std::multimap<std::string, std::string> &params) {
  httplib::Client cli = make_client(ep);
  httplib::Params p(params.begin(), params.end());
  auto res = cli.Get(target(ep, path), p, httplib::Headers {});
  if (!res) {
    unavailable(ep, path, httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    unavailable(ep, path, "HTTP " + std::to_string(res->status));
  }
  return { res->status, res->get_header_value("Content-Type"), res->body };
}

nlohmann::json http_post_json(const HttpEndpoint &ep, const std::string &path,
                              const nlohmann::json &body) {
  httplib::Client cli = make_client(ep);
  auto res = cli.Post(target(ep, path), body.dump(), "application/json");
  if (!res) {
    unavailable(ep, path, httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    unavailable(ep, path, "HTTP " + std::to_string(res->status));
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception &e) {
    unavailable(ep, path, std::string("invalid JSON reply: ") + e.what());
  }
}

}  // namespace synthroute
