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

#include "amongus/engine/observation.h"

namespace amongus {

struct PromptWindow {
  int max_public_events = 20;  // most recent announcements shown
  int max_transcript = 60;     // most recent meeting utterances shown
};

// Rules of play plus the objective for `role`.
std::string role_instructions(Role role);

// Full prompt for one decision: role rules and objective, the observation,
// the legal-action menu in exact syntax, the agent's previous condensed
// memory, and the required three-section output format.
std::string build_prompt(const Observation& obs,
                         const std::string& role_instructions,
                         const std::string& previous_memory = {},
                         const PromptWindow& window = {});

}  // namespace amongus
