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

#include "amongus/agents/chat_agent.h"

#include "amongus/agents/response_parser.h"

namespace amongus {
namespace {

constexpr const char* kSystem =
    "You are an agent in a text-based social deduction game. Always answer in "
    "the requested three-section format.";

}  // namespace

ChatAgent::ChatAgent(std::shared_ptr<const ChatClient> client,
                     PromptWindow window)
    : client_(std::move(client)), window_(window) {}

AgentTurn ChatAgent::decide(const Observation& obs) {
  AgentTurn turn;
  turn.prompt =
      build_prompt(obs, role_instructions(obs.viewer_role), memory_, window_);
  ChatResult result = client_->complete(turn.prompt, kSystem);
  turn.raw = result.text;
  auto parsed = parse_response(result.text, obs.legal_actions, obs.player_names);
  if (auto* r = std::get_if<AgentResponse>(&parsed)) {
    memory_ = r->condensed_memory;
    turn.response = std::move(*r);
  } else {
    const auto& a = std::get<Abstention>(parsed);
    turn.reason = result.text.empty() && !result.error.empty()
                      ? "endpoint failure: " + result.error
                      : a.reason;
  }
  return turn;
}

}  // namespace amongus
