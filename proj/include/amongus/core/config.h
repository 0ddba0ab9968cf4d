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

#include <cstdint>
#include <string>
#include <vector>

#include "amongus/core/map.h"

namespace amongus {

struct GameConfig {
  int num_crew = 3;
  int num_impostors = 1;
  int tasks_per_crew = 3;
  int discussion_rounds = 3;
  int kill_cooldown = 3;
  int emergency_meetings_per_player = 1;
  int max_rounds = 100;
  MapSpec map = default_map();
  std::uint64_t seed = 0;

  int num_players() const { return num_crew + num_impostors; }
  bool operator==(const GameConfig&) const = default;
};

struct ConfigIssue {
  enum class Severity { kWarning, kViolation };
  Severity severity;
  std::string field;
  std::string rule;

  bool operator==(const ConfigIssue&) const = default;
};

// Checks every GameConfig invariant. Player totals outside the 4..8 grid are
// warnings; anything the engine cannot run is a violation.
std::vector<ConfigIssue> validate_config(const GameConfig& config);

bool has_violations(const std::vector<ConfigIssue>& issues);

}  // namespace amongus
