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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "amongus/core/json_io.h"

namespace httplib {
class Server;
}

namespace amongus {

// Local stand-in for a chat-completion endpoint, used by tests and the
// `mock-server` CLI subcommand.
struct MockReply {
  int status = 200;
  std::string content;
};

enum class MockFallback {
  kFixed,   // always `fixed_content`
  kEcho,    // the last user message
  kPlayer,  // a plausible structured reply chosen from the prompt's menu
};

struct MockChatScript {
  std::vector<MockReply> replies;  // served first, in order
  MockFallback fallback = MockFallback::kPlayer;
  std::string fixed_content;
  // In kPlayer mode, prompts whose hash is divisible by this get a reply with
  // no usable sections. 0 disables.
  int malformed_every = 0;
  std::uint64_t seed = 0;
};

void from_json(const Json& j, MockChatScript& s);
MockChatScript load_mock_script(const std::filesystem::path& path);

// Deterministic kPlayer reply for one prompt.
std::string mock_player_reply(std::string_view prompt, std::uint64_t seed,
                              int malformed_every);

class MockChatServer {
 public:
  // Binds immediately; port 0 picks a free port.
  explicit MockChatServer(MockChatScript script, int port = 0,
                          std::string host = "127.0.0.1");
  ~MockChatServer();
  MockChatServer(const MockChatServer&) = delete;
  MockChatServer& operator=(const MockChatServer&) = delete;

  int port() const { return port_; }
  std::string url() const;  // full chat-completions URL
  int requests() const { return requests_.load(); }
  Json last_request() const;

  // Blocks until stop() is called from another thread.
  void wait();
  void stop();

 private:
  std::string respond(const Json& request, int* status);

  MockChatScript script_;
  std::string host_;
  int port_ = 0;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::atomic<int> requests_{0};
  mutable std::mutex mu_;
  std::size_t next_reply_ = 0;
  Json last_request_;
};

}  // namespace amongus
