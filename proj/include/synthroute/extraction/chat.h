//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EXTRACTION_CHAT_H_
#define SYNTHROUTE_EXTRACTION_CHAT_H_

#include <atomic>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "synthroute/http_client.h"

namespace synthroute::extraction {

struct ChatMessage {
  std::string role;  // "system" or "user"
  std::string content;
};

class ChatProvider {
public:
  virtual ~ChatProvider() = default;

  // Throws kProviderUnavailable on transport failure.
  virtual std::string complete(const std::vector<ChatMessage> &messages) const = 0;
};

// Replays scripted answers in order; once the script is exhausted the last
// answer repeats. Records every prompt it receives.
class MockChatProvider final: public ChatProvider {
public:
  explicit MockChatProvider(std::vector<std::string> script);

  // A JSON array of answer strings.
  static std::vector<std::string> load_script(const std::filesystem::path &path);
  static MockChatProvider from_file(const std::filesystem::path &path);

  std::string complete(const std::vector<ChatMessage> &messages) const override;

  int calls() const;
  std::vector<std::vector<ChatMessage>> received() const;

private:
  std::vector<std::string> script_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<ChatMessage>> received_;
};

// POST {base}/chat/completions {"model", "messages", "temperature": 0},
// answer read from choices[0].message.content.
class HttpChatProvider final: public ChatProvider {
public:
  HttpChatProvider(HttpEndpoint endpoint, std::string model);

  std::string complete(const std::vector<ChatMessage> &messages) const override;

private:
  HttpEndpoint endpoint_;
  std::string model_;
};

}  // namespace synthroute::extraction

#endif  // SYNTHROUTE_EXTRACTION_CHAT_H_
