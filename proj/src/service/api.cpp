//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/api.h"

#include <charconv>
#include <vector>

#include <httplib.h>

namespace synthroute::service {
namespace {

using nlohmann::json;

std::vector<std::string> split_path(const std::string &path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < path.size()) {
    const std::size_t end = path.find('/', start);
    const std::string part = path.substr(start, end == std::string::npos ? end : end - start);
    if (!part.empty()) {
      out.push_back(part);
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_id(const std::string &text, const char *what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be an integer: " + text);
  }
  return v;
}

template <typename T>
std::optional<T> query_number(const ApiRequest &r, const char *key) {
  const auto it = r.query.find(key);
  if (it == r.query.end() || it->second.empty()) {
    return std::nullopt;
  }
  const std::string &s = it->second;
  T v {};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("query parameter ") + key + " is not a number: " + s);
  }
  return v;
}

json parse_json_body(const ApiRequest &r) {
  if (r.body.empty()) {
    return json::object();
  }
  try {
    json j = json::parse(r.body);
    if (!j.is_object()) {
      throw Error(ErrorCode::kBadRequest, "request body must be a JSON object");
    }
    return j;
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kBadRequest, std::string("request body is not JSON: ") + e.what());
  }
}

template <typename T>
std::optional<T> body_field(const json &body, const char *key) {
  if (!body.contains(key) || body[key].is_null()) {
    return std::nullopt;
  }
  try {
    return body[key].get<T>();
  } catch (const json::exception &) {
    throw Error(ErrorCode::kInvalidArgument, std::string("field ") + key + " has the wrong type");
  }
}

template <typename T>
T required_field(const json &body, const char *key) {
  auto v = body_field<T>(body, key);
  if (!v) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing field ") + key);
  }
  return *v;
}

ProjectionQuery projection_query(const ApiRequest &r) {
  ProjectionQuery q;
  q.perplexity = query_number<double>(r, "perplexity");
  q.seed = query_number<std::uint64_t>(r, "seed");
  q.display_count = query_number<int>(r, "display_count");
  return q;
}

ProjectionQuery projection_query(const json &body) {
  ProjectionQuery q;
  q.perplexity = body_field<double>(body, "perplexity");
  q.seed = body_field<std::uint64_t>(body, "seed");
  q.display_count = body_field<int>(body, "display_count");
  return q;
}

struct RouteNotFound { };
struct MethodNotAllowed { };

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
  case ErrorCode::kWorkspaceNotFound:
  case ErrorCode::kJobNotFound:
  case ErrorCode::kNodeNotFound:
  case ErrorCode::kParentNotFound:
  case ErrorCode::kPaperNotFound:
    return 404;
  case ErrorCode::kReactantMismatch:
  case ErrorCode::kComparisonFull:
  case ErrorCode::kSearchPending:
    return 409;
  case ErrorCode::kBadRequest:
    return 400;
  case ErrorCode::kProviderUnavailable:
    return 502;
  case ErrorCode::kIoError:
  case ErrorCode::kUnsupportedSchema:
    return 500;
  default:
    return 422;
  }
}

json error_body(std::string_view code, const std::string &message, json details) {
  return { { "code", code }, { "message", message }, { "details", std::move(details) } };
}

ApiResponse Api::handle(const ApiRequest &request) {
  try {
    return route(request);
  } catch (const Error &e) {
    return { http_status(e.code()),
             error_body(e.code_name(), e.what(),
                        { { "method", request.method }, { "path", request.path } }) };
  } catch (const RouteNotFound &) {
    return { 404, error_body("RouteNotFound", "no route for " + request.path) };
  } catch (const MethodNotAllowed &) {
    return { 405, error_body("MethodNotAllowed",
                             request.method + " is not allowed on " + request.path) };
  } catch (const std::exception &e) {
    return { 500, error_body("Internal", e.what()) };
  }
}

ApiResponse Api::route(const ApiRequest &r) {
  const std::vector<std::string> seg = split_path(r.path);
  const std::string &m = r.method;
  auto expect = [&m](const char *method) {
    if (m != method) {
      throw MethodNotAllowed {};
    }
  };

  if (seg.size() == 2 && seg[0] == "jobs") {
    if (m == "DELETE") {
      return { 200, service_.cancel_job(seg[1]) };
    }
    expect("GET");
    return { 200, service_.get_job(seg[1]) };
  }
  if (seg.empty() || seg[0] != "workspaces") {
    throw RouteNotFound {};
  }
  if (seg.size() == 1) {
    expect("POST");
    const json body = parse_json_body(r);
    const auto smiles = required_field<std::string>(body, "starting_smiles");
    const auto expected =
        body_field<std::vector<std::string>>(body, "expected_reactions").value_or(
            std::vector<std::string> {});
    return { 201, service_.create_workspace(smiles, expected) };
  }

  const std::string &id = seg[1];
  if (seg.size() == 2) {
    expect("GET");
    return { 200, service_.get_workspace(id) };
  }

  const std::string &res = seg[2];
  if (seg.size() == 3) {
    if (res == "papers") {
      expect("GET");
      return { 200, service_.get_papers(id) };
    }
    if (res == "projection") {
      if (m == "POST") {
        return { 202, service_.start_projection(id, projection_query(parse_json_body(r))) };
      }
      expect("GET");
      return { 200, service_.get_projection(id, projection_query(r)) };
    }
    if (res == "extractions") {
      expect("POST");
      const json body = parse_json_body(r);
      return { 202, service_.start_extraction(id, required_field<std::string>(body, "paper_id"),
                                              body_field<std::string>(body, "reactant"),
                                              body_field<std::string>(body, "expected_reaction")) };
    }
    if (res == "tree") {
      expect("GET");
      return { 200, service_.get_tree(id) };
    }
    if (res == "comparison") {
      if (m == "POST") {
        const json body = parse_json_body(r);
        return { 200,
                 service_.add_to_comparison(id, required_field<std::uint64_t>(body, "node_id")) };
      }
      expect("GET");
      return { 200, service_.get_comparison(id) };
    }
    if (res == "rankings") {
      expect("GET");
      return { 200, service_.get_rankings(id) };
    }
    if (res == "weights") {
      expect("PUT");
      const json body = parse_json_body(r);
      rank::CriteriaWeights w;
      w.steps = required_field<double>(body, "steps");
      w.duration = required_field<double>(body, "duration");
      w.yield = required_field<double>(body, "yield");
      return { 200, service_.put_weights(id, w) };
    }
    if (res == "relevancy") {
      expect("GET");
      return { 200, service_.relevancy_stats(id) };
    }
    throw RouteNotFound {};
  }

  if (res == "comparison" && seg.size() == 4) {
    expect("DELETE");
    return { 200, service_.remove_from_comparison(id, parse_id(seg[3], "node id")) };
  }
  if (res != "tree" || seg[3] != "nodes") {
    throw RouteNotFound {};
  }
  if (seg.size() == 4) {
    expect("POST");
    return { 201, service_.add_node(id, parse_json_body(r)) };
  }
  const std::uint64_t node = parse_id(seg[4], "node id");
  if (seg.size() == 5) {
    expect("DELETE");
    return { 200, service_.remove_node(id, node) };
  }
  if (seg.size() == 6 && seg[5] == "difficulty") {
    expect("POST");
    return { 200, service_.set_difficulty(id, node, parse_json_body(r)) };
  }
  if (seg.size() == 6 && seg[5] == "similarity") {
    expect("GET");
    return { 200, service_.similarity(id, node) };
  }
  throw RouteNotFound {};
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Api &api): impl_(std::make_unique<Impl>()) {
  auto handler = [&api](const httplib::Request &req, httplib::Response &res) {
    ApiRequest r { req.method, req.path, {}, req.body };
    for (const auto &[k, v]: req.params) {
      r.query.emplace(k, v);
    }
    const ApiResponse out = api.handle(r);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
}

HttpServer::~HttpServer() {
  stop();
}

int HttpServer::bind(const std::string &host, int port) {
  if (port == 0) {
    return impl_->server.bind_to_any_port(host);
  }
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() {
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  impl_->server.stop();
}

}  // namespace synthroute::service
