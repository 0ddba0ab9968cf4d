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
#include <string>

#include "amongus/agents/agent.h"
#include "amongus/agents/chat_client.h"
#include "amongus/agents/prompt.h"

namespace amongus {

// Agent backed by a chat-completion endpoint. Carries its own previous
// condensed memory into the next prompt.
class ChatAgent : public Agent {
 public:
  ChatAgent(std::shared_ptr<const ChatClient> client, PromptWindow window = {});

  AgentTurn decide(const Observation& obs) override;

  const std::string& memory() const { return memory_; }

 private:
  std::shared_ptr<const ChatClient> client_;
  PromptWindow window_;
  std::string memory_;
};

}  // namespace amongus
