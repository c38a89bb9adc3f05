//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_TESTS_LOCAL_SERVER_H_
#define SYNTHROUTE_TESTS_LOCAL_SERVER_H_

#include <string>
#include <thread>

#include <httplib.h>

namespace synthroute::testing {

// An httplib server on an ephemeral loopback port, stopped on destruction.
class LocalServer {
public:
  LocalServer() = default;
  LocalServer(const LocalServer &) = delete;
  LocalServer &operator=(const LocalServer &) = delete;

  ~LocalServer() {
    server.stop();
    if (thread_.joinable()) {
      thread_.join();
    }
  }

  void start() {
    port_ = server.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  std::string url(const std::string &prefix = "") const {
    return "http://127.0.0.1:" + std::to_string(port_) + prefix;
  }

  httplib::Server server;

private:
  int port_ = 0;
  std::thread thread_;
};

}  // namespace synthroute::testing

#endif  // SYNTHROUTE_TESTS_LOCAL_SERVER_H_
