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

#include "amongus/core/config.h"

#include <algorithm>

namespace amongus {

std::vector<ConfigIssue> validate_config(const GameConfig& c) {
  using S = ConfigIssue::Severity;
  std::vector<ConfigIssue> out;
  auto violation = [&](std::string field, std::string rule) {
    out.push_back({S::kViolation, std::move(field), std::move(rule)});
  };
  if (c.num_crew < 1) violation("num_crew", "must be >= 1");
  if (c.num_impostors < 1) violation("num_impostors", "must be >= 1");
  if (c.tasks_per_crew < 1) violation("tasks_per_crew", "must be >= 1");
  if (c.discussion_rounds < 1) violation("discussion_rounds", "must be >= 1");
  if (c.kill_cooldown < 0) violation("kill_cooldown", "must be >= 0");
  if (c.emergency_meetings_per_player < 0) {
    violation("emergency_meetings_per_player", "must be >= 0");
  }
  if (c.max_rounds < 1) violation("max_rounds", "must be >= 1");

  const int total = c.num_players();
  if (c.num_crew >= 1 && c.num_impostors >= 1) {
    if (c.num_impostors > c.num_crew) {
      violation("num_impostors",
                "impostors must not outnumber crewmates at start (Y >= X is "
                "immediate parity)");
    }
    if (total < 4 || total > 8) {
      out.push_back({S::kWarning, "num_crew+num_impostors",
                     "total players " + std::to_string(total) +
                         " outside the 4..8 experiment grid"});
    }
  }
  for (auto& p : c.map.problems()) violation("map", std::move(p));
  return out;
}

bool has_violations(const std::vector<ConfigIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(), [](const ConfigIssue& i) {
    return i.severity == ConfigIssue::Severity::kViolation;
  });
}

}  // namespace amongus
