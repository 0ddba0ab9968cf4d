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

#include "amongus/core/action.h"

#include <stdexcept>

namespace amongus {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string player_name(std::span<const std::string> names, PlayerId id) {
  if (id >= 0 && static_cast<size_t>(id) < names.size()) return names[id];
  return "P" + std::to_string(id);
}

}  // namespace

const char* role_name(Role role) {
  return role == Role::kImpostor ? "Impostor" : "Crewmate";
}

Role role_from_name(const std::string& name) {
  if (name == "Impostor") return Role::kImpostor;
  if (name == "Crewmate") return Role::kCrewmate;
  throw std::invalid_argument("unknown role: " + name);
}

std::string action_tag(const Action& a, std::span<const std::string> names) {
  return std::visit(
      Overloaded{
          [](const action::Move& m) { return "MOVE " + m.room; },
          [](const action::CompleteTask& t) {
            return "COMPLETE TASK " + std::to_string(t.task_index);
          },
          [&](const action::Kill& k) {
            return "KILL " + player_name(names, k.target);
          },
          [](const action::Vent& v) { return "VENT " + v.room; },
          [](const action::ReportBody&) {
            return std::string("REPORT DEAD BODY");
          },
          [](const action::CallEmergencyMeeting&) {
            return std::string("CALL EMERGENCY MEETING");
          },
          [](const action::Speak& s) {
            return s.text.empty() ? std::string("SPEAK") : "SPEAK: " + s.text;
          },
          [&](const action::Vote& v) {
            return v.target ? "VOTE " + player_name(names, *v.target)
                            : std::string("VOTE SKIP");
          },
      },
      a);
}

const char* action_kind(const Action& a) {
  static constexpr const char* kNames[] = {
      "move", "complete_task", "kill", "vent", "report_body",
      "call_emergency_meeting", "speak", "vote"};
  return kNames[a.index()];
}

bool is_task_phase_action(const Action& a) {
  return !std::holds_alternative<action::Speak>(a) &&
         !std::holds_alternative<action::Vote>(a);
}

}  // namespace amongus
