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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amongus/core/state.h"

namespace amongus {
namespace event {

struct GameInitialized {
  std::vector<std::string> names;
  std::vector<Role> roles;
  std::vector<PlayerId> turn_order;
  std::vector<std::vector<Task>> tasks;
  bool operator==(const GameInitialized&) const = default;
};

// Prompt text sent to a model-backed agent.
struct PromptIssued {
  PlayerId player = 0;
  std::string text;
  bool operator==(const PromptIssued&) const = default;
};

// Structured reply of an agent; `parsed` is false for abstentions.
struct ResponseReceived {
  PlayerId player = 0;
  bool parsed = false;
  std::string condensed_memory;
  std::string thinking;
  std::string action;  // menu tag of the chosen action, empty if none
  std::string raw;
  bool operator==(const ResponseReceived&) const = default;
};

struct ActionTaken {
  PlayerId player = 0;
  Action action;
  bool operator==(const ActionTaken&) const = default;
};

struct NoOp {
  PlayerId player = 0;
  std::string reason;
  bool operator==(const NoOp&) const = default;
};

struct PlayerKilled {
  PlayerId killer = 0;
  PlayerId victim = 0;
  std::string room;
  bool operator==(const PlayerKilled&) const = default;
};

struct TaskCompleted {
  PlayerId player = 0;
  int task_index = 0;
  std::string room;
  bool operator==(const TaskCompleted&) const = default;
};

struct MeetingCalled {
  int meeting_index = 0;
  MeetingCause cause = MeetingCause::kEmergency;
  PlayerId caller = 0;
  std::optional<PlayerId> victim;
  std::string room;
  bool operator==(const MeetingCalled&) const = default;
};

struct UtteranceMade {
  UtteranceRecord utterance;
  bool operator==(const UtteranceMade&) const = default;
};

struct VoteCast {
  int meeting_index = 0;
  PlayerId voter = 0;
  std::optional<PlayerId> target;
  bool operator==(const VoteCast&) const = default;
};

struct MeetingResolved {
  int meeting_index = 0;
  std::optional<PlayerId> ejected;
  std::optional<Role> revealed_role;
  bool operator==(const MeetingResolved&) const = default;
};

struct GameEnded {
  Outcome outcome;
  bool operator==(const GameEnded&) const = default;
};

}  // namespace event

using EventBody =
    std::variant<event::GameInitialized, event::PromptIssued,
                 event::ResponseReceived, event::ActionTaken, event::NoOp,
                 event::PlayerKilled, event::TaskCompleted,
                 event::MeetingCalled, event::UtteranceMade, event::VoteCast,
                 event::MeetingResolved, event::GameEnded>;

struct Event {
  int timestep = 0;
  int round = 0;
  EventBody body;

  bool operator==(const Event&) const = default;
};

const char* event_type(const Event& e);

// Per-round bookkeeping used by the RQ1 analyses.
struct RoundCounters {
  int round = 0;
  int discussions = 0;
  int ejections = 0;
  bool operator==(const RoundCounters&) const = default;
};

// Public end-of-game state, enough to check replay equivalence.
struct StateSnapshot {
  int timestep = 0;
  int round = 0;
  std::vector<PlayerState> players;
  std::vector<Body> bodies;
  int meetings_held = 0;
  bool operator==(const StateSnapshot&) const = default;
};

struct GameRecord {
  std::string game_id;
  GameConfig config;
  std::uint64_t seed = 0;
  std::vector<Event> events;
  Outcome outcome;
  std::vector<RoundCounters> rounds;
  StateSnapshot final_state;

  // Utterances in log order, abstentions included.
  std::vector<UtteranceRecord> utterances() const;
  bool operator==(const GameRecord&) const = default;
};

}  // namespace amongus
