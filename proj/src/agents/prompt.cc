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

#include "amongus/agents/prompt.h"

#include <algorithm>
#include <sstream>

namespace amongus {
namespace {

constexpr const char* kRules =
    "You are playing a text-based version of the social deduction game Among "
    "Us.\n"
    "Rules:\n"
    "- Most players are Crewmates; a minority are Impostors. Roles are "
    "hidden.\n"
    "- The game alternates between task phases and meetings.\n"
    "- In a task phase you may move to an adjacent room or complete one of "
    "your tasks in your current room. Impostors may also kill a Crewmate in "
    "the same room or travel through a vent.\n"
    "- A kill leaves a body in that room. Anyone who finds a body may report "
    "it. Anyone in the Cafeteria may call an emergency meeting.\n"
    "- A meeting suspends all other activity. Players speak for a fixed "
    "number of discussion rounds, then cast a private vote for a player or "
    "skip. The player with the most votes is ejected; a tie ejects nobody. "
    "The game reveals whether the ejected player was an Impostor.\n"
    "- Crewmates win when all tasks are completed or all Impostors are "
    "ejected. Impostors win when they equal or outnumber the Crewmates.\n";

std::string join_names(const Observation& obs,
                       const std::vector<PlayerId>& ids) {
  if (ids.empty()) return "nobody";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += obs.name_of(ids[i]);
  }
  return out;
}

}  // namespace

std::string role_instructions(Role role) {
  std::string out = kRules;
  if (role == Role::kImpostor) {
    out +=
        "Your role: Impostor.\n"
        "Objective: eliminate Crewmates until Impostors equal or outnumber "
        "them, without being identified and ejected.\n";
  } else {
    out +=
        "Your role: Crewmate.\n"
        "Objective: complete your tasks and identify and eject the "
        "Impostors.\n";
  }
  return out;
}

std::string build_prompt(const Observation& obs,
                         const std::string& instructions,
                         const std::string& previous_memory,
                         const PromptWindow& window) {
  std::ostringstream p;
  p << instructions << "\n";
  p << "You are " << obs.name_of(obs.viewer) << ".\n";
  if (!obs.teammates.empty()) {
    p << "Fellow impostors: " << join_names(obs, obs.teammates) << ".\n";
  }
  p << "Timestep " << obs.timestep << ", round " << obs.round << ".\n";

  if (!previous_memory.empty()) {
    p << "\nYour previous condensed memory:\n" << previous_memory << "\n";
  }

  const auto& events = obs.public_events;
  if (!events.empty()) {
    p << "\nAnnouncements since your last turn:\n";
    const auto first = events.size() > static_cast<std::size_t>(window.max_public_events)
                           ? events.size() - window.max_public_events
                           : 0;
    for (std::size_t i = first; i < events.size(); ++i) {
      p << "- " << events[i] << "\n";
    }
  }

  if (obs.meeting) {
    const auto& m = *obs.meeting;
    p << "\nMeeting " << m.meeting_index << ": ";
    if (m.cause == MeetingCause::kBodyReport) {
      p << obs.name_of(m.caller) << " reported the body of "
        << obs.name_of(*m.victim) << " in " << m.room << ".\n";
    } else {
      p << obs.name_of(m.caller) << " called an emergency meeting.\n";
    }
    p << "Players present: " << join_names(obs, m.attendees) << ".\n";
    if (obs.phase == ObservationPhase::kDiscussion) {
      p << "Discussion round " << m.discussion_round << ".\n";
    } else {
      p << "Discussion is over. Cast your private vote.\n";
    }
    if (!m.transcript.empty()) {
      p << "Discussion so far:\n";
      const auto first =
          m.transcript.size() > static_cast<std::size_t>(window.max_transcript)
              ? m.transcript.size() - window.max_transcript
              : 0;
      for (std::size_t i = first; i < m.transcript.size(); ++i) {
        const auto& u = m.transcript[i];
        p << obs.name_of(u.speaker_id) << ": "
          << (u.abstention() ? "(no response)" : u.text) << "\n";
      }
    }
  } else {
    p << "\nYou are in " << obs.current_room << ".\n";
    p << "Players here: " << join_names(obs, obs.visible_players) << ".\n";
    if (!obs.visible_bodies.empty()) {
      p << "Dead bodies here: " << join_names(obs, obs.visible_bodies) << ".\n";
    }
    if (!obs.own_tasks.empty()) {
      p << "Your tasks:\n";
      for (std::size_t i = 0; i < obs.own_tasks.size(); ++i) {
        p << "- task " << i << " in " << obs.own_tasks[i].room << ": "
          << (obs.own_tasks[i].done ? "done" : "not done") << "\n";
      }
    }
  }

  p << "\nAvailable actions (copy one exactly):\n";
  for (const auto& a : obs.legal_actions) {
    if (std::holds_alternative<action::Speak>(a)) {
      p << "- SPEAK: <your message>\n";
    } else {
      p << "- " << action_tag(a, obs.player_names) << "\n";
    }
  }

  p << "\nRespond in exactly this format:\n"
       "[Condensed Memory] <a short summary of the important recent "
       "events>\n"
       "[Thinking Process] <your reasoning>\n"
       "[Action] <one action from the list above>\n";
  return p.str();
}

}  // namespace amongus
