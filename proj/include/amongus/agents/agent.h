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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amongus/engine/observation.h"

namespace amongus {

// The three mandatory sections of a structured agent reply.
struct AgentResponse {
  std::string condensed_memory;
  std::string thinking;
  Action action;

  bool operator==(const AgentResponse&) const = default;
};

// One decision. An empty `response` is an abstention; the engine turns it
// into a no-op (task phase), an empty utterance (discussion) or no vote.
struct AgentTurn {
  std::optional<AgentResponse> response;
  std::string prompt;  // logged when non-empty
  std::string raw;     // model output, logged when non-empty
  std::string reason;  // why the agent abstained

  static AgentTurn act(Action a) {
    AgentTurn t;
    t.response = AgentResponse{{}, {}, std::move(a)};
    return t;
  }
  static AgentTurn abstain(std::string why) {
    AgentTurn t;
    t.reason = std::move(why);
    return t;
  }
};

// A player controller. Agents are owned by one game and called sequentially.
// The observation's phase tells the agent which kind of action is expected.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentTurn decide(const Observation& obs) = 0;

  // Convenience views over decide() for meeting phases.
  std::string speak(const Observation& obs);
  std::optional<PlayerId> vote(const Observation& obs);
};

using AgentRoster = std::vector<std::unique_ptr<Agent>>;

}  // namespace amongus
