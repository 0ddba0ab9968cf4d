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
#include <random>
#include <string>
#include <vector>

#include "amongus/core/event.h"

namespace amongus {

struct GameState {
  std::string game_id;
  GameConfig config;
  int timestep = 0;
  int round = 0;
  Phase phase = Phase::kTask;
  std::optional<MeetingState> meeting;  // engaged iff phase == kMeeting
  std::optional<Outcome> outcome;       // engaged iff phase == kFinished
  std::vector<PlayerState> players;
  std::vector<Body> bodies;
  std::vector<PlayerId> turn_order;
  std::vector<std::string> public_log;  // announcements every player sees
  std::vector<std::size_t> public_cursor;  // per player, into public_log
  std::vector<Event> events;  // append-only
  int meetings_held = 0;
  std::mt19937_64 rng;

  std::vector<std::string> player_names() const;
  int alive_count(Role role) const;
  // True when every task owned by a living crewmate is done.
  bool alive_crew_tasks_done() const;
  int tasks_remaining() const;
  const PlayerState& player(PlayerId id) const;
  PlayerState& player(PlayerId id);
  bool valid_player(PlayerId id) const;

  bool operator==(const GameState&) const = default;
};

StateSnapshot snapshot(const GameState& state);

}  // namespace amongus
