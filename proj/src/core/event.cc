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

#include "amongus/core/event.h"

#include "amongus/core/game_state.h"

namespace amongus {

const char* event_type(const Event& e) {
  static constexpr const char* kNames[] = {
      "game_initialized", "prompt",       "response",     "action",
      "noop",             "player_killed", "task_completed",
      "meeting_called",   "utterance",    "vote",         "meeting_resolved",
      "game_ended"};
  return kNames[e.body.index()];
}

StateSnapshot snapshot(const GameState& state) {
  return {state.timestep, state.round, state.players, state.bodies,
          state.meetings_held};
}

std::vector<UtteranceRecord> GameRecord::utterances() const {
  std::vector<UtteranceRecord> out;
  for (const auto& e : events) {
    if (const auto* u = std::get_if<event::UtteranceMade>(&e.body)) {
      out.push_back(u->utterance);
    }
  }
  return out;
}

}  // namespace amongus
