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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amongus/core/game_state.h"

namespace amongus {

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

class IllegalActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Display names assigned to player ids in order.
std::string default_player_name(PlayerId id);

// Seeded role shuffle, task placement and turn order. Everybody starts in the
// cafeteria. Throws ConfigError on violations (warnings are accepted).
GameState new_game(const GameConfig& config, std::string game_id = "game");

// Throws std::invalid_argument for unknown or dead players. Finished games
// and resolved meetings offer nothing.
std::vector<Action> legal_actions(const GameState& state, PlayerId player);

// True when `action` is on the player's menu; Speak matches regardless of its
// text.
bool is_legal(const GameState& state, PlayerId player, const Action& action);

// Applies one legal action and appends its effects to state.events. Returns
// the appended events. Throws IllegalActionError, leaving the state unchanged.
std::vector<Event> apply_action(GameState& state, PlayerId player,
                                const Action& action);

// Marks the current discussion round complete; after k rounds the meeting
// moves to voting.
void end_discussion_round(GameState& state);

// Tallies the recorded votes, ejects and reveals, clears bodies and returns
// to the task phase (or finishes the game).
std::vector<Event> resolve_meeting(GameState& state);

using VoteMap = std::map<PlayerId, std::optional<PlayerId>>;

// Unique strict plurality over named targets that also beats Skip; ties and
// Skip-dominant tallies eject nobody.
std::optional<PlayerId> tally_votes(const VoteMap& votes);

// Rule table shared by check_termination, in precedence order: no impostors
// left, parity (impostors >= crew), all living crew tasks done, round limit.
std::optional<Outcome> termination_rule(int alive_impostors, int alive_crew,
                                        bool tasks_done, int round,
                                        int max_rounds);

std::optional<Outcome> check_termination(const GameState& state);

// Moves to Finished and logs the outcome. No-op when already finished.
void finish(GameState& state, const Outcome& outcome);

}  // namespace amongus
