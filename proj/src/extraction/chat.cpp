//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/extraction/chat.h"

#include <fstream>

#include "synthroute/error.h"

namespace synthroute::extraction {

MockChatProvider::MockChatProvider(std::vector<std::string> script)
    : script_(std::move(script)) {
  if (script_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mock script is empty");
  }
}

std::vector<std::string>
MockChatProvider::load_script(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  try {
    return nlohmann::json::parse(in).get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kBadRequest,
                path.string() + ": expected a JSON array of strings: "
                    + e.what());
  }
}

MockChatProvider MockChatProvider::from_file(const std::filesystem::path &path) {
  return MockChatProvider(load_script(path));
}

std::string
MockChatProvider::complete(const std::vector<ChatMessage> &messages) const {
  std::lock_guard lock(mu_);
  received_.push_back(messages);
  const std::size_t i = std::min(received_.size(), script_.size()) - 1;
  return script_[i];
}

int MockChatProvider::calls() const {
  std::lock_guard lock(mu_);
  return static_cast<int>(received_.size());
}

std::vector<std::vector<ChatMessage>> MockChatProvider::received() const {
  std::lock_guard lock(mu_);
  return received_;
}

HttpChatProvider::HttpChatProvider(HttpEndpoint endpoint, std::string model)
    : endpoint_(std::move(endpoint)), model_(std::move(model)) { }

std::string
HttpChatProvider::complete(const std::vector<ChatMessage> &messages) const {
  nlohmann::json msgs = nlohmann::json::array();
  for (const ChatMessage &m: messages) {
    msgs.push_back({ { "role", m.role }, { "content", m.content } });
  }
  const nlohmann::json reply = http_post_json(
      endpoint_, "/chat/completions",
      { { "model", model_ }, { "messages", msgs }, { "temperature", 0 } });
  try {
    return reply.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kProviderUnavailable,
                std::string("chat reply has no message content: ") + e.what());
  }
}

}  // namespace synthroute::extraction
