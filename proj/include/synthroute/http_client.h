//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_HTTP_CLIENT_H_
#define SYNTHROUTE_HTTP_CLIENT_H_

#include <map>
#include <string>

#include <json.hpp>

namespace synthroute {

// Base URL split into origin ("http://host:port") and path prefix ("/v1").
struct HttpEndpoint {
  std::string origin;
  std::string path_prefix;
  std::string bearer_token;
  int timeout_seconds = 60;

  static HttpEndpoint parse(const std::string &base_url,
                            std::string bearer_token = {});
};

struct HttpReply {
  int status = 0;
  std::string content_type;
  std::string body;
};

// Transport failures and non-2xx replies throw kProviderUnavailable.
HttpReply http_get(const HttpEndpoint &ep, const std::string &path,
                   const std::multimap<std::string, std::string> &params = {});
nlohmann::json http_post_json(const HttpEndpoint &ep, const std::string &path,
                              const nlohmann::json &body);

}  // namespace synthroute

#endif  // SYNTHROUTE_HTTP_CLIENT_H_
