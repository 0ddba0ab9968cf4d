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

#include "amongus/agents/agent.h"
#include "amongus/core/game_state.h"

namespace amongus {

// One task-phase timestep: every living player acts once in turn order.
// Stops early when a meeting is called or the game ends; advances the
// timestep by one.
void run_task_phase(GameState& state, AgentRoster& agents);

// k discussion rounds, a private vote, then resolution. Returns the meeting as
// it stood when votes were tallied.
MeetingState run_meeting(GameState& state, AgentRoster& agents);

// Plays to completion (or the round limit). `agents[i]` controls player i.
// Throws ConfigError for invalid configs; agent failures become no-ops.
GameRecord run_game(const GameConfig& config, AgentRoster& agents,
                    const std::string& game_id = "game");

// Builds a record from a finished (or abandoned) state.
GameRecord make_record(const GameState& state);

// Re-applies the recorded inputs (actions, utterances, votes) to a fresh game.
// Throws std::runtime_error when the log is inconsistent with the rules.
GameState replay_record(const GameRecord& record);

}  // namespace amongus
