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

#include <optional>
#include <span>
#include <string>
#include <variant>

namespace amongus {

using PlayerId = int;

enum class Role { kCrewmate, kImpostor };

const char* role_name(Role role);
Role role_from_name(const std::string& name);

namespace action {

struct Move {
  std::string room;
  bool operator==(const Move&) const = default;
};
struct CompleteTask {
  int task_index = 0;
  bool operator==(const CompleteTask&) const = default;
};
struct Kill {
  PlayerId target = 0;
  bool operator==(const Kill&) const = default;
};
struct Vent {
  std::string room;
  bool operator==(const Vent&) const = default;
};
struct ReportBody {
  bool operator==(const ReportBody&) const = default;
};
struct CallEmergencyMeeting {
  bool operator==(const CallEmergencyMeeting&) const = default;
};
struct Speak {
  std::string text;
  bool operator==(const Speak&) const = default;
};
// An empty target is a Skip vote.
struct Vote {
  std::optional<PlayerId> target;
  bool operator==(const Vote&) const = default;
};

}  // namespace action

using Action =
    std::variant<action::Move, action::CompleteTask, action::Kill,
                 action::Vent, action::ReportBody,
                 action::CallEmergencyMeeting, action::Speak, action::Vote>;

// Menu syntax shown to agents, e.g. "MOVE Storage", "KILL Blue",
// "VOTE SKIP". Speak renders as "SPEAK" when its text is empty and as
// "SPEAK: <text>" otherwise. `names` maps player ids to display names.
std::string action_tag(const Action& a, std::span<const std::string> names);

// Short machine-stable kind name ("move", "kill", ...).
const char* action_kind(const Action& a);

bool is_task_phase_action(const Action& a);

}  // namespace amongus
