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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "amongus/core/action.h"
#include "amongus/core/config.h"

namespace amongus {

// Number of maximal whitespace-separated tokens.
int word_count(std::string_view text);

struct Task {
  std::string room;
  bool done = false;
  bool operator==(const Task&) const = default;
};

struct PlayerState {
  PlayerId id = 0;
  std::string name;
  Role role = Role::kCrewmate;
  std::string location;
  bool alive = true;
  std::vector<Task> tasks;
  int kill_ready_at = 0;
  int emergency_calls_left = 0;

  bool operator==(const PlayerState&) const = default;
};

struct Body {
  PlayerId victim = 0;
  std::string room;
  bool operator==(const Body&) const = default;
};

struct UtteranceRecord {
  std::string game_id;
  int meeting_index = 0;
  int discussion_round = 0;
  PlayerId speaker_id = 0;
  Role speaker_role = Role::kCrewmate;
  std::string text;  // empty means abstention
  int word_count = 0;

  bool abstention() const { return text.empty(); }
  // "<game_id>/m<meeting>/r<round>/p<speaker>"; unique within a corpus.
  std::string key() const;
  bool operator==(const UtteranceRecord&) const = default;
};

UtteranceRecord make_utterance(std::string game_id, int meeting_index,
                               int discussion_round, PlayerId speaker,
                               Role role, std::string text);

enum class MeetingCause { kBodyReport, kEmergency };
enum class MeetingStage { kDiscussion, kVoting, kResolved };

struct MeetingState {
  int meeting_index = 0;  // 1-based within a game
  MeetingCause cause = MeetingCause::kEmergency;
  PlayerId caller = 0;               // reporter or emergency caller
  std::optional<PlayerId> victim;    // set for body reports
  std::string room;                  // where the meeting was triggered
  MeetingStage stage = MeetingStage::kDiscussion;
  int discussion_round = 0;          // rounds completed, 0..k
  std::vector<UtteranceRecord> transcript;
  std::map<PlayerId, std::optional<PlayerId>> votes;  // nullopt = Skip
  std::optional<PlayerId> ejected;

  bool operator==(const MeetingState&) const = default;
};

enum class OutcomeKind { kCrewWin, kImpostorWin, kTimeout };
enum class WinReason { kNone, kAllTasksDone, kAllImpostorsEjected, kParity };

struct Outcome {
  OutcomeKind kind = OutcomeKind::kTimeout;
  WinReason reason = WinReason::kNone;

  static Outcome crew(WinReason r) { return {OutcomeKind::kCrewWin, r}; }
  static Outcome impostor() {
    return {OutcomeKind::kImpostorWin, WinReason::kParity};
  }
  static Outcome timeout() { return {OutcomeKind::kTimeout, WinReason::kNone}; }
  bool operator==(const Outcome&) const = default;
};

const char* outcome_name(OutcomeKind kind);
const char* reason_name(WinReason reason);
OutcomeKind outcome_from_name(std::string_view name);
WinReason reason_from_name(std::string_view name);

enum class Phase { kTask, kMeeting, kFinished };

}  // namespace amongus
