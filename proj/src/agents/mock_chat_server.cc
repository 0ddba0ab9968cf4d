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

#include "amongus/agents/mock_chat_server.h"

#include <array>
#include <sstream>
#include <stdexcept>

#include "httplib.h"

#include "amongus/core/random.h"

namespace amongus {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> lines_after(std::string_view text,
                                     std::string_view header) {
  std::vector<std::string> out;
  auto pos = text.find(header);
  if (pos == std::string_view::npos) return out;
  std::istringstream in(std::string(text.substr(pos + header.size())));
  std::string line;
  std::getline(in, line);  // rest of the header line
  while (std::getline(in, line) && line.rfind("- ", 0) == 0) {
    out.push_back(line.substr(2));
  }
  return out;
}

std::string line_value(std::string_view text, std::string_view prefix) {
  auto pos = text.find(prefix);
  if (pos == std::string_view::npos) return {};
  auto end = text.find('\n', pos);
  return std::string(text.substr(pos + prefix.size(), end - pos - prefix.size()));
}

std::string classify_reply(std::string_view prompt, std::uint64_t h) {
  if (prompt.find("Falsification (lying)") != std::string_view::npos) {
    switch (h % 10) {
      case 0:
        return "Falsification";
      case 1:
        return "Concealment";
      default:
        return "Equivocation";
    }
  }
  switch (h % 20) {
    case 0:
      return "Representatives";
    case 1:
      return "Commissives";
    default:
      return "Directives";
  }
}

}  // namespace

void from_json(const Json& j, MockChatScript& s) {
  s = MockChatScript{};
  if (j.contains("replies")) {
    for (const auto& r : j.at("replies")) {
      MockReply reply;
      reply.status = r.value("status", 200);
      reply.content = r.value("content", std::string());
      s.replies.push_back(std::move(reply));
    }
  }
  const std::string fallback = j.value("fallback", std::string("player"));
  if (fallback == "fixed") {
    s.fallback = MockFallback::kFixed;
  } else if (fallback == "echo") {
    s.fallback = MockFallback::kEcho;
  } else if (fallback == "player") {
    s.fallback = MockFallback::kPlayer;
  } else {
    throw std::invalid_argument("unknown mock fallback: " + fallback);
  }
  s.fixed_content = j.value("fixed_content", std::string());
  s.malformed_every = j.value("malformed_every", 0);
  s.seed = j.value("seed", std::uint64_t{0});
}

MockChatScript load_mock_script(const std::filesystem::path& path) {
  return Json::parse(read_text_file(path)).get<MockChatScript>();
}

std::string mock_player_reply(std::string_view prompt, std::uint64_t seed,
                              int malformed_every) {
  const std::uint64_t h = splitmix64(fnv1a(prompt) ^ seed);
  if (prompt.find("Word options") != std::string_view::npos) {
    return classify_reply(prompt, h);
  }
  if (malformed_every > 0 && h % static_cast<std::uint64_t>(malformed_every) == 0) {
    return "I... uh... think maybe?";
  }
  const auto options = lines_after(prompt, "Available actions (copy one exactly):");
  const std::string memory = "[Condensed Memory] " +
                             line_value(prompt, "You are in ") +
                             line_value(prompt, "Meeting ");
  const std::string thinking = "\n[Thinking Process] Keep it simple.";
  if (options.empty()) return memory + thinking + "\n[Action] ";

  auto pick = [&](const std::vector<std::string>& from) {
    return from[(h >> 8) % from.size()];
  };
  if (options.front().rfind("SPEAK", 0) == 0) {
    std::string present = line_value(prompt, "Players present: ");
    std::vector<std::string> names;
    std::istringstream in(present);
    std::string name;
    while (std::getline(in, name, ',')) {
      while (!name.empty() && name.front() == ' ') name.erase(name.begin());
      if (!name.empty() && name.back() == '.') name.pop_back();
      if (!name.empty()) names.push_back(name);
    }
    const std::string who = names.empty() ? "someone" : pick(names);
    static const std::array<const char*, 5> kLines = {
        "Let's all check Electrical next.",
        "I saw {} in Storage right before the report.",
        "I was near Storage earlier, but I didn't really see what happened.",
        "I'll finish my tasks after this meeting.",
        "We should vote {} unless someone has a better lead."};
    std::string text = kLines[(h >> 16) % kLines.size()];
    if (auto p = text.find("{}"); p != std::string::npos) text.replace(p, 2, who);
    return memory + thinking + "\n[Action] SPEAK: " + text;
  }

  std::vector<std::string> preferred;
  for (const auto& o : options) {
    if (o.rfind("KILL", 0) == 0 || o.rfind("COMPLETE TASK", 0) == 0 ||
        o.rfind("REPORT DEAD BODY", 0) == 0) {
      preferred.push_back(o);
    }
  }
  std::vector<std::string> moves;
  for (const auto& o : options) {
    if (o.rfind("MOVE", 0) == 0 || o.rfind("VENT", 0) == 0) moves.push_back(o);
  }
  std::string choice;
  if (!preferred.empty()) {
    choice = pick(preferred);
  } else if (!moves.empty()) {
    choice = pick(moves);
  } else {
    choice = pick(options);
  }
  return memory + thinking + "\n[Action] " + choice;
}

MockChatServer::MockChatServer(MockChatScript script, int port,
                               std::string host)
    : script_(std::move(script)),
      host_(std::move(host)),
      server_(std::make_unique<httplib::Server>()) {
  server_->Post(".*", [this](const httplib::Request& req, httplib::Response& res) {
    ++requests_;
    Json request;
    try {
      request = Json::parse(req.body);
    } catch (const std::exception&) {
      res.status = 400;
      res.set_content(R"({"error":"bad json"})", "application/json");
      return;
    }
    int status = 200;
    std::string content = respond(request, &status);
    res.status = status;
    if (status != 200) {
      res.set_content(R"({"error":"scripted failure"})", "application/json");
      return;
    }
    Json reply = {{"choices",
                   Json::array({Json{{"index", 0},
                                     {"message", Json{{"role", "assistant"},
                                                      {"content", content}}}}})}};
    res.set_content(reply.dump(), "application/json");
  });
  port_ = port == 0 ? server_->bind_to_any_port(host_)
                    : (server_->bind_to_port(host_, port) ? port : -1);
  if (port_ <= 0) {
    throw std::runtime_error("mock chat server: cannot bind " + host_ + ":" +
                             std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

MockChatServer::~MockChatServer() { stop(); }

std::string MockChatServer::url() const {
  return "http://" + host_ + ":" + std::to_string(port_) +
         "/v1/chat/completions";
}

Json MockChatServer::last_request() const {
  std::lock_guard<std::mutex> lock(mu_);
  return last_request_;
}

void MockChatServer::wait() {
  if (thread_.joinable()) thread_.join();
}

void MockChatServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockChatServer::respond(const Json& request, int* status) {
  std::string user;
  if (request.contains("messages") && request["messages"].is_array() &&
      !request["messages"].empty()) {
    const auto& last = request["messages"].back();
    if (last.contains("content") && last["content"].is_string()) {
      user = last["content"].get<std::string>();
    }
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    last_request_ = request;
    if (next_reply_ < script_.replies.size()) {
      const auto& r = script_.replies[next_reply_++];
      *status = r.status;
      return r.content;
    }
  }
  *status = 200;
  switch (script_.fallback) {
    case MockFallback::kFixed:
      return script_.fixed_content;
    case MockFallback::kEcho:
      return user;
    case MockFallback::kPlayer:
      return mock_player_reply(user, script_.seed, script_.malformed_every);
  }
  return {};
}

}  // namespace amongus
