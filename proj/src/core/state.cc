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

#include "amongus/core/state.h"

#include "amongus/core/game_state.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace amongus {

int word_count(std::string_view text) {
  int n = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

std::string UtteranceRecord::key() const {
  return game_id + "/m" + std::to_string(meeting_index) + "/r" +
         std::to_string(discussion_round) + "/p" + std::to_string(speaker_id);
}

UtteranceRecord make_utterance(std::string game_id, int meeting_index,
                               int discussion_round, PlayerId speaker,
                               Role role, std::string text) {
  UtteranceRecord u;
  u.game_id = std::move(game_id);
  u.meeting_index = meeting_index;
  u.discussion_round = discussion_round;
  u.speaker_id = speaker;
  u.speaker_role = role;
  u.word_count = word_count(text);
  // Whitespace-only generations carry no words and count as abstentions.
  u.text = u.word_count == 0 ? std::string() : std::move(text);
  return u;
}

const char* outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kCrewWin:
      return "CrewWin";
    case OutcomeKind::kImpostorWin:
      return "ImpostorWin";
    case OutcomeKind::kTimeout:
      return "Timeout";
  }
  return "?";
}

const char* reason_name(WinReason reason) {
  switch (reason) {
    case WinReason::kNone:
      return "None";
    case WinReason::kAllTasksDone:
      return "AllTasksDone";
    case WinReason::kAllImpostorsEjected:
      return "AllImpostorsEjected";
    case WinReason::kParity:
      return "Parity";
  }
  return "?";
}

OutcomeKind outcome_from_name(std::string_view name) {
  for (auto k : {OutcomeKind::kCrewWin, OutcomeKind::kImpostorWin,
                 OutcomeKind::kTimeout}) {
    if (name == outcome_name(k)) return k;
  }
  throw std::invalid_argument("unknown outcome: " + std::string(name));
}

WinReason reason_from_name(std::string_view name) {
  for (auto r : {WinReason::kNone, WinReason::kAllTasksDone,
                 WinReason::kAllImpostorsEjected, WinReason::kParity}) {
    if (name == reason_name(r)) return r;
  }
  throw std::invalid_argument("unknown win reason: " + std::string(name));
}

std::vector<std::string> GameState::player_names() const {
  std::vector<std::string> out;
  out.reserve(players.size());
  for (const auto& p : players) out.push_back(p.name);
  return out;
}

int GameState::alive_count(Role role) const {
  return static_cast<int>(
      std::count_if(players.begin(), players.end(), [&](const PlayerState& p) {
        return p.alive && p.role == role;
      }));
}

bool GameState::alive_crew_tasks_done() const {
  return tasks_remaining() == 0;
}

int GameState::tasks_remaining() const {
  int n = 0;
  for (const auto& p : players) {
    if (!p.alive || p.role != Role::kCrewmate) continue;
    for (const auto& t : p.tasks) n += t.done ? 0 : 1;
  }
  return n;
}

bool GameState::valid_player(PlayerId id) const {
  return id >= 0 && static_cast<size_t>(id) < players.size();
}

const PlayerState& GameState::player(PlayerId id) const {
  if (!valid_player(id)) {
    throw std::out_of_range("unknown player " + std::to_string(id));
  }
  return players[id];
}

PlayerState& GameState::player(PlayerId id) {
  if (!valid_player(id)) {
    throw std::out_of_range("unknown player " + std::to_string(id));
  }
  return players[id];
}

}  // namespace amongus
