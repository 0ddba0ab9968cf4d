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

#include "amongus/agents/scripted.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "amongus/core/random.h"

namespace amongus {
namespace {

template <typename T>
std::vector<T> menu_items(const Observation& obs) {
  std::vector<T> out;
  for (const auto& a : obs.legal_actions) {
    if (const auto* x = std::get_if<T>(&a)) out.push_back(*x);
  }
  return out;
}

template <typename T>
bool offered(const Observation& obs) {
  return std::any_of(obs.legal_actions.begin(), obs.legal_actions.end(),
                     [](const Action& a) { return std::holds_alternative<T>(a); });
}

bool mentions(const std::string& text, const std::string& name) {
  std::size_t pos = 0;
  while ((pos = text.find(name, pos)) != std::string::npos) {
    const bool left_ok =
        pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    const auto end = pos + name.size();
    const bool right_ok =
        end >= text.size() || !std::isalnum(static_cast<unsigned char>(text[end]));
    if (left_ok && right_ok) return true;
    pos = end;
  }
  return false;
}

void fill(std::string& s, const char* key, const std::string& value) {
  for (auto p = s.find(key); p != std::string::npos; p = s.find(key)) {
    s.replace(p, std::char_traits<char>::length(key), value);
  }
}

using Pool = std::vector<const char*>;

class ScriptedAgent : public Agent {
 public:
  ScriptedAgent(ScriptedSpec spec, MapSpec map, std::uint64_t seed)
      : spec_(spec), map_(std::move(map)), rng_(seed) {}

  AgentTurn decide(const Observation& obs) override {
    remember(obs);
    switch (obs.phase) {
      case ObservationPhase::kTask:
        return task_turn(obs);
      case ObservationPhase::kDiscussion:
        return speak_turn(obs);
      case ObservationPhase::kVoting:
        return vote_turn(obs);
    }
    return AgentTurn::abstain("unknown phase");
  }

 private:
  struct Sighting {
    std::string room;
    int timestep = 0;
  };

  void remember(const Observation& obs) {
    if (obs.meeting) {
      std::set<PlayerId> alive(obs.meeting->attendees.begin(),
                               obs.meeting->attendees.end());
      for (PlayerId p = 0; p < static_cast<PlayerId>(obs.player_names.size()); ++p) {
        if (!alive.count(p)) known_dead_.insert(p);
      }
      return;
    }
    for (PlayerId p : obs.visible_players) {
      last_seen_[p] = {obs.current_room, obs.timestep};
    }
    for (PlayerId v : obs.visible_bodies) known_dead_.insert(v);
    my_rooms_.push_back(obs.current_room);
  }

  bool is_teammate(const Observation& obs, PlayerId p) const {
    return std::find(obs.teammates.begin(), obs.teammates.end(), p) !=
           obs.teammates.end();
  }

  template <typename T>
  T pick(const std::vector<T>& items) {
    return items[uniform_index(rng_, items.size())];
  }

  // Move (or vent, when allowed) that brings us closest to any target room.
  std::optional<Action> step_toward(const Observation& obs,
                                    const std::vector<std::string>& targets,
                                    bool use_vents) {
    std::vector<Action> options;
    for (auto& m : menu_items<action::Move>(obs)) options.push_back(m);
    if (use_vents) {
      for (auto& v : menu_items<action::Vent>(obs)) options.push_back(v);
    }
    int best = std::numeric_limits<int>::max();
    std::vector<Action> best_options;
    for (const auto& a : options) {
      const std::string& room = std::holds_alternative<action::Move>(a)
                                    ? std::get<action::Move>(a).room
                                    : std::get<action::Vent>(a).room;
      int d = std::numeric_limits<int>::max();
      for (const auto& t : targets) {
        int dt = map_.distance(room, t, use_vents);
        if (dt >= 0) d = std::min(d, dt);
      }
      if (d < best) {
        best = d;
        best_options.clear();
      }
      if (d == best) best_options.push_back(a);
    }
    if (best_options.empty()) return std::nullopt;
    return pick(best_options);
  }

  AgentTurn wander(const Observation& obs) {
    auto moves = menu_items<action::Move>(obs);
    if (moves.empty()) return AgentTurn::abstain("nowhere to go");
    return AgentTurn::act(pick(moves));
  }

  AgentTurn task_turn(const Observation& obs) {
    switch (spec_.task) {
      case TaskPolicy::kStandStill:
        return AgentTurn::abstain("standing still");
      case TaskPolicy::kPacifist:
        return wander(obs);
      case TaskPolicy::kHunter:
        return hunt(obs);
      case TaskPolicy::kRandomWalker:
      case TaskPolicy::kTaskRusher:
        break;
    }
    if (offered<action::ReportBody>(obs)) {
      return AgentTurn::act(action::ReportBody{});
    }
    if (auto tasks = menu_items<action::CompleteTask>(obs); !tasks.empty()) {
      return AgentTurn::act(tasks.front());
    }
    if (spec_.task == TaskPolicy::kRandomWalker) {
      if (offered<action::CallEmergencyMeeting>(obs) && rng_() % 10 == 0) {
        return AgentTurn::act(action::CallEmergencyMeeting{});
      }
      return wander(obs);
    }
    std::vector<std::string> targets;
    for (const auto& t : obs.own_tasks) {
      if (!t.done) targets.push_back(t.room);
    }
    if (targets.empty()) return wander(obs);
    if (auto step = step_toward(obs, targets, false)) return AgentTurn::act(*step);
    return wander(obs);
  }

  AgentTurn hunt(const Observation& obs) {
    if (auto kills = menu_items<action::Kill>(obs); !kills.empty()) {
      auto k = pick(kills);
      known_dead_.insert(k.target);
      last_seen_.erase(k.target);
      return AgentTurn::act(k);
    }
    // A crewmate is here but the cooldown is running: wait for it.
    for (PlayerId p : obs.visible_players) {
      if (!is_teammate(obs, p)) return AgentTurn::abstain("waiting for cooldown");
    }
    // Most recent sightings first; stale ones in the current room are dropped.
    std::vector<std::pair<PlayerId, Sighting>> leads;
    for (const auto& [p, s] : last_seen_) {
      if (is_teammate(obs, p) || known_dead_.count(p)) continue;
      if (s.room == obs.current_room) continue;
      leads.emplace_back(p, s);
    }
    if (leads.empty()) return wander(obs);
    int nearest = std::numeric_limits<int>::max();
    std::vector<std::string> rooms;
    for (const auto& [p, s] : leads) {
      int d = map_.distance(obs.current_room, s.room, true);
      if (d < 0) continue;
      if (d < nearest) {
        nearest = d;
        rooms.clear();
      }
      if (d == nearest) rooms.push_back(s.room);
    }
    if (auto step = step_toward(obs, rooms, true)) return AgentTurn::act(*step);
    return wander(obs);
  }

  // Player this agent would name for the current meeting.
  std::optional<PlayerId> suspect(const Observation& obs) {
    const auto& m = *obs.meeting;
    std::optional<PlayerId> best;
    int best_t = -1;
    for (PlayerId p : m.attendees) {
      if (p == obs.viewer || is_teammate(obs, p)) continue;
      auto it = last_seen_.find(p);
      if (it == last_seen_.end()) continue;
      const bool at_scene =
          m.cause == MeetingCause::kEmergency || it->second.room == m.room;
      if (at_scene && it->second.timestep > best_t) {
        best = p;
        best_t = it->second.timestep;
      }
    }
    return best;
  }

  // Player named most often in the transcript, excluding `exclude`; none on a
  // tie.
  std::optional<PlayerId> most_accused(const Observation& obs,
                                       const std::set<PlayerId>& exclude,
                                       std::optional<PlayerId> bonus) const {
    std::map<PlayerId, int> counts;
    for (const auto& u : obs.meeting->transcript) {
      if (u.abstention() || u.speaker_id == obs.viewer) continue;
      for (PlayerId p : obs.meeting->attendees) {
        if (!exclude.count(p) && mentions(u.text, obs.name_of(p))) ++counts[p];
      }
    }
    if (bonus && !exclude.count(*bonus)) counts[*bonus] += 2;
    std::optional<PlayerId> best;
    int best_n = 0;
    bool tie = false;
    for (const auto& [p, n] : counts) {
      if (n > best_n) {
        best = p;
        best_n = n;
        tie = false;
      } else if (n == best_n) {
        tie = true;
      }
    }
    return tie ? std::nullopt : best;
  }

  std::set<PlayerId> self_and_team(const Observation& obs) const {
    std::set<PlayerId> out(obs.teammates.begin(), obs.teammates.end());
    out.insert(obs.viewer);
    return out;
  }

  std::optional<PlayerId> scapegoat(const Observation& obs) {
    auto exclude = self_and_team(obs);
    if (auto p = most_accused(obs, exclude, std::nullopt)) return p;
    std::vector<PlayerId> crew;
    for (PlayerId p : obs.meeting->attendees) {
      if (!exclude.count(p)) crew.push_back(p);
    }
    if (crew.empty()) return std::nullopt;
    return pick(crew);
  }

  std::string fake_room(const std::string& avoid) {
    std::vector<std::string> rooms;
    for (const auto& r : map_.rooms) {
      if (r != avoid) rooms.push_back(r);
    }
    return rooms.empty() ? avoid : pick(rooms);
  }

  AgentTurn speak_turn(const Observation& obs) {
    const auto& m = *obs.meeting;
    if (spec_.meeting == MeetingScript::kSilent) {
      return AgentTurn::abstain("silent");
    }
    if (m.meeting_index != meeting_) {
      meeting_ = m.meeting_index;
      suspect_ = spec_.meeting == MeetingScript::kAccuser ? suspect(obs)
                                                          : std::nullopt;
      alibi_ = fake_room(m.room);
    }
    const int round = std::min(m.discussion_round, 3);
    std::string text;
    if (rng_() % 12 == 0) {
      static const Pool kExpressive = {"Sorry, I didn't notice the body.",
                                       "I'm worried about how fast this is going.",
                                       "Thanks everyone for sharing."};
      text = pick(kExpressive);
    } else if (spec_.meeting == MeetingScript::kAccuser) {
      text = accuser_line(round, m);
    } else {
      text = defender_line(round, obs);
    }
    fill(text, "{ROOM}", m.room);
    fill(text, "{MY}", my_rooms_.empty() ? map_.cafeteria : my_rooms_.back());
    fill(text, "{ALIBI}", alibi_);
    if (m.victim) fill(text, "{V}", obs.name_of(*m.victim));
    if (suspect_) fill(text, "{S}", obs.name_of(*suspect_));
    return AgentTurn::act(action::Speak{std::move(text)});
  }

  std::string accuser_line(int round, const MeetingContext& m) {
    static const std::array<Pool, 3> kAccuse = {
        Pool{"Let's look at {S}, they were in {ROOM} right before the report.",
             "I saw {S} in {ROOM} right before the report.",
             "We should question {S}, they were near {ROOM}."},
        Pool{"Let's vote {S}.", "We should vote {S} out now.",
             "Vote {S}, they were closest to the body."},
        Pool{"I'll vote {S}.", "Let's vote {S} and move on."}};
    static const std::array<Pool, 3> kNoLead = {
        Pool{"Let's all share where we were.", "Let's all check Electrical next.",
             "Where was everyone when this happened?"},
        Pool{"Let's skip this vote and stay in groups.",
             "We should stick together and finish tasks."},
        Pool{"I'll keep an eye on everyone after this meeting.",
             "Let's skip for now."}};
    const auto& pools = suspect_ ? kAccuse : kNoLead;
    std::string line = pick(pools[round - 1]);
    if (m.cause == MeetingCause::kEmergency && suspect_ && round == 1) {
      line = "Let's talk about {S}, I saw them in {MY} a moment ago.";
    }
    return line;
  }

  std::string defender_line(int round, const Observation& obs) {
    static const Pool kAlibi = {
        "I was in {ALIBI} the whole time doing tasks.",
        "I was near {ROOM} earlier, but I didn't really see what happened.",
        "I finished my tasks quickly.",
        "Let's not rush, we need more information."};
    static const Pool kDeflect = {"Let's vote {G}, they were acting strange.",
                                  "Maybe we should look at {G}.",
                                  "I think {G} is suspicious."};
    static const Pool kCommit = {"I'll vote {G}.", "Let's vote {G} and move on.",
                                 "Sorry, I'm not sure, but {G} seems off."};
    if (round == 1) return pick(kAlibi);
    auto goat = scapegoat(obs);
    if (!goat) return "Let's skip, nobody saw anything.";
    std::string line = pick(round == 2 ? kDeflect : kCommit);
    fill(line, "{G}", obs.name_of(*goat));
    return line;
  }

  AgentTurn vote_turn(const Observation& obs) {
    std::optional<PlayerId> target;
    switch (spec_.meeting) {
      case MeetingScript::kSilent:
        break;
      case MeetingScript::kAccuser:
        target = most_accused(obs, self_and_team(obs), suspect_);
        break;
      case MeetingScript::kDefender:
        target = scapegoat(obs);
        break;
    }
    return AgentTurn::act(action::Vote{target});
  }

  ScriptedSpec spec_;
  MapSpec map_;
  std::mt19937_64 rng_;
  std::map<PlayerId, Sighting> last_seen_;
  std::set<PlayerId> known_dead_;
  std::vector<std::string> my_rooms_;
  int meeting_ = 0;
  std::optional<PlayerId> suspect_;
  std::string alibi_;
};

class RoleScriptedAgent : public Agent {
 public:
  RoleScriptedAgent(ScriptedSpec crew, ScriptedSpec impostor, MapSpec map,
                    std::uint64_t seed)
      : crew_(crew), impostor_(impostor), map_(std::move(map)), seed_(seed) {}

  AgentTurn decide(const Observation& obs) override {
    if (!inner_) {
      inner_ = std::make_unique<ScriptedAgent>(
          obs.viewer_role == Role::kImpostor ? impostor_ : crew_, map_, seed_);
    }
    return inner_->decide(obs);
  }

 private:
  ScriptedSpec crew_;
  ScriptedSpec impostor_;
  MapSpec map_;
  std::uint64_t seed_;
  std::unique_ptr<Agent> inner_;
};

}  // namespace

TaskPolicy task_policy_from_name(const std::string& name) {
  for (auto p : {TaskPolicy::kRandomWalker, TaskPolicy::kTaskRusher,
                 TaskPolicy::kStandStill, TaskPolicy::kHunter,
                 TaskPolicy::kPacifist}) {
    if (name == task_policy_name(p)) return p;
  }
  throw std::invalid_argument("unknown task policy: " + name);
}

MeetingScript meeting_script_from_name(const std::string& name) {
  for (auto s : {MeetingScript::kAccuser, MeetingScript::kDefender,
                 MeetingScript::kSilent}) {
    if (name == meeting_script_name(s)) return s;
  }
  throw std::invalid_argument("unknown meeting script: " + name);
}

const char* task_policy_name(TaskPolicy p) {
  switch (p) {
    case TaskPolicy::kRandomWalker:
      return "random_walker";
    case TaskPolicy::kTaskRusher:
      return "task_rusher";
    case TaskPolicy::kStandStill:
      return "stand_still";
    case TaskPolicy::kHunter:
      return "hunter";
    case TaskPolicy::kPacifist:
      return "pacifist";
  }
  return "?";
}

const char* meeting_script_name(MeetingScript s) {
  switch (s) {
    case MeetingScript::kAccuser:
      return "accuser";
    case MeetingScript::kDefender:
      return "defender";
    case MeetingScript::kSilent:
      return "silent";
  }
  return "?";
}

std::unique_ptr<Agent> make_scripted_agent(ScriptedSpec spec, MapSpec map,
                                           std::uint64_t seed) {
  return std::make_unique<ScriptedAgent>(spec, std::move(map), seed);
}

}  // namespace amongus

namespace amongus {

std::unique_ptr<Agent> make_role_scripted_agent(ScriptedSpec crew,
                                                ScriptedSpec impostor,
                                                MapSpec map, std::uint64_t seed) {
  return std::make_unique<RoleScriptedAgent>(crew, impostor, std::move(map),
                                             seed);
}

}  // namespace amongus
