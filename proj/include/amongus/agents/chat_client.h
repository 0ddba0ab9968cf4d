// Copyright 2026 The amongus-sim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "amongus/core/json_io.h"

namespace amongus {

// An OpenAI-style chat-completion endpoint. `base_url` is the full POST URL,
// e.g. http://localhost:8000/v1/chat/completions.
struct ChatEndpointConfig {
  std::string base_url;
  std::string model_name;
  double timeout_seconds = 60.0;
  int max_retries = 2;
  double temperature = 0.7;
  std::string api_key_env;  // empty: no Authorization header
  int retry_backoff_ms = 250;  // doubled after every failed attempt
};

void to_json(Json& j, const ChatEndpointConfig& c);
void from_json(const Json& j, ChatEndpointConfig& c);

struct ChatResult {
  std::string text;  // empty on failure
  int attempts = 0;
  int last_status = 0;  // 0 when no HTTP response arrived
  std::string error;
};

// Thread-safe: every request opens its own connection. Construction checks
// the URL, limits and API key so misconfiguration fails before any game runs.
class ChatClient {
 public:
  explicit ChatClient(ChatEndpointConfig config);

  // Sends {model, messages, temperature}; the system message is omitted when
  // empty. Retries connection failures, HTTP 429 and 5xx up to max_retries
  // times; returns empty text once attempts are exhausted.
  ChatResult complete(std::string_view user,
                      std::string_view system = {}) const;

  const ChatEndpointConfig& config() const { return config_; }

 private:
  ChatEndpointConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::string api_key_;
};

// Returns the first choice's text, or "" when every attempt failed.
std::string chat_complete(const ChatEndpointConfig& endpoint,
                          std::string_view prompt);

}  // namespace amongus
