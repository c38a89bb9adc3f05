//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_API_H_
#define SYNTHROUTE_SERVICE_API_H_

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "synthroute/error.h"
#include "synthroute/service/service.h"

namespace synthroute::service {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// HTTP status for an error code: 404 for missing resources, 409 for
// conflicts with the current state, 400 for unreadable requests, 502 for
// provider failures and 422 for everything the request got wrong.
int http_status(ErrorCode code);

// {"code", "message", "details"}
nlohmann::json error_body(std::string_view code, const std::string &message,
                          nlohmann::json details = nlohmann::json::object());

// Routes REST requests to the service. Transport independent so the whole
// surface can be driven in-process.
class Api {
public:
  explicit Api(Service &service): service_(service) { }

  ApiResponse handle(const ApiRequest &request);

private:
  ApiResponse route(const ApiRequest &request);

  Service &service_;
};

// HTTP transport for Api.
class HttpServer {
public:
  explicit HttpServer(Api &api);
  ~HttpServer();

  // Binds host:port, port 0 picking a free one. Returns the bound port or
  // -1 on failure.
  int bind(const std::string &host, int port);
  // Serves until stop() is called from another thread.
  void listen();
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_API_H_
