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

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "amongus/agents/agent.h"

namespace amongus {

// Why a reply could not be used; the raw text is preserved for the log.
struct Abstention {
  std::string raw;
  std::string reason;

  bool operator==(const Abstention&) const = default;
};

using ParsedResponse = std::variant<AgentResponse, Abstention>;

// Extracts the [Condensed Memory], [Thinking Process] and [Action] sections
// (headers matched case-insensitively) and resolves the action line against
// the menu: exact tag match first, then a unique prefix match. Speak takes
// the text after "SPEAK:". Anything unresolvable, ambiguous or empty is an
// Abstention.
ParsedResponse parse_response(std::string_view raw,
                              std::span<const Action> menu,
                              std::span<const std::string> names);

// Inverse of parse_response for well-formed responses.
std::string render_response(const AgentResponse& response,
                            std::span<const std::string> names);

}  // namespace amongus
