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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amongus/core/game_state.h"

namespace amongus {

enum class ObservationPhase { kTask, kDiscussion, kVoting };

struct MeetingContext {
  int meeting_index = 0;
  MeetingCause cause = MeetingCause::kEmergency;
  PlayerId caller = 0;
  std::optional<PlayerId> victim;
  std::string room;
  int discussion_round = 0;  // 1-based round being spoken; k+1 while voting
  std::vector<UtteranceRecord> transcript;
  std::vector<PlayerId> attendees;  // alive players, id order
};

// What one player may know at one decision point. Other players' roles are
// never included, except that impostors know their fellow impostors.
struct Observation {
  PlayerId viewer = 0;
  Role viewer_role = Role::kCrewmate;
  std::vector<std::string> player_names;
  std::vector<PlayerId> teammates;  // impostor viewers only
  std::string map_cafeteria;
  int timestep = 0;
  int round = 0;
  ObservationPhase phase = ObservationPhase::kTask;
  std::string current_room;
  std::vector<PlayerId> visible_players;  // alive, same room, excluding self
  std::vector<PlayerId> visible_bodies;   // victims lying in current room
  std::vector<Task> own_tasks;
  std::vector<Action> legal_actions;
  std::vector<std::string> public_events;  // since the viewer's last turn
  std::optional<MeetingContext> meeting;

  const std::string& name_of(PlayerId id) const { return player_names.at(id); }
};

// Builds the observation for `viewer`; `public_since` indexes
// GameState::public_log.
Observation observe(const GameState& state, PlayerId viewer,
                    std::size_t public_since = 0);

}  // namespace amongus
