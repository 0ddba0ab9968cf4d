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

#include "amongus/engine/rules.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "amongus/core/random.h"

namespace amongus {
namespace {

std::string describe(const std::vector<ConfigIssue>& issues) {
  std::ostringstream out;
  out << "invalid game config:";
  for (const auto& i : issues) {
    if (i.severity == ConfigIssue::Severity::kViolation) {
      out << " [" << i.field << ": " << i.rule << "]";
    }
  }
  return out.str();
}

void require_alive(const GameState& s, PlayerId player) {
  if (!s.valid_player(player)) {
    throw std::invalid_argument("unknown player " + std::to_string(player));
  }
  if (!s.players[player].alive) {
    throw std::invalid_argument("player " + std::to_string(player) +
                                " is dead");
  }
}

Event make_event(const GameState& s, EventBody body) {
  return Event{s.timestep, s.round, std::move(body)};
}

std::vector<Event> tail_since(const GameState& s, std::size_t mark) {
  return {s.events.begin() + static_cast<std::ptrdiff_t>(mark), s.events.end()};
}

void maybe_finish(GameState& s) {
  if (auto o = check_termination(s)) finish(s, *o);
}

void start_meeting(GameState& s, PlayerId caller, MeetingCause cause,
                   std::optional<PlayerId> victim) {
  MeetingState m;
  m.meeting_index = ++s.meetings_held;
  m.cause = cause;
  m.caller = caller;
  m.victim = victim;
  m.room = s.players[caller].location;
  s.meeting = std::move(m);
  s.phase = Phase::kMeeting;
  s.events.push_back(make_event(
      s, event::MeetingCalled{s.meeting->meeting_index, cause, caller, victim,
                              s.meeting->room}));
  std::string text = "Meeting " + std::to_string(s.meeting->meeting_index) +
                     ": " + s.players[caller].name;
  if (cause == MeetingCause::kBodyReport) {
    text += " reported the body of " + s.players[*victim].name + " in " +
            s.meeting->room + ".";
  } else {
    text += " called an emergency meeting in " + s.meeting->room + ".";
  }
  s.public_log.push_back(std::move(text));
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::invalid_argument(describe(issues)), issues_(std::move(issues)) {}

std::string default_player_name(PlayerId id) {
  static const char* kColors[] = {"Red",    "Blue",  "Green", "Pink",
                                  "Orange", "Yellow", "Black", "White",
                                  "Purple", "Brown", "Cyan",  "Lime"};
  constexpr int kCount = sizeof(kColors) / sizeof(kColors[0]);
  if (id >= 0 && id < kCount) return kColors[id];
  return "P" + std::to_string(id + 1);
}

GameState new_game(const GameConfig& config, std::string game_id) {
  auto issues = validate_config(config);
  if (has_violations(issues)) throw ConfigError(std::move(issues));

  GameState s;
  s.game_id = std::move(game_id);
  s.config = config;
  s.rng.seed(config.seed);

  const int n = config.num_players();
  std::vector<Role> roles(n, Role::kCrewmate);
  std::fill_n(roles.begin(), config.num_impostors, Role::kImpostor);
  stable_shuffle(std::span<Role>(roles), s.rng);

  const auto& rooms = config.map.rooms;
  s.players.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& p = s.players[i];
    p.id = i;
    p.name = default_player_name(i);
    p.role = roles[i];
    p.location = config.map.cafeteria;
    p.kill_ready_at = p.role == Role::kImpostor ? config.kill_cooldown : 0;
    p.emergency_calls_left = config.emergency_meetings_per_player;
    if (p.role == Role::kCrewmate) {
      for (int t = 0; t < config.tasks_per_crew; ++t) {
        p.tasks.push_back({rooms[uniform_index(s.rng, rooms.size())], false});
      }
    }
  }
  s.turn_order.resize(n);
  std::iota(s.turn_order.begin(), s.turn_order.end(), 0);
  stable_shuffle(std::span<PlayerId>(s.turn_order), s.rng);
  s.public_cursor.assign(n, 0);

  event::GameInitialized init;
  for (const auto& p : s.players) {
    init.names.push_back(p.name);
    init.roles.push_back(p.role);
    init.tasks.push_back(p.tasks);
  }
  init.turn_order = s.turn_order;
  s.events.push_back(make_event(s, std::move(init)));
  return s;
}

std::vector<Action> legal_actions(const GameState& s, PlayerId player) {
  require_alive(s, player);
  std::vector<Action> out;
  const auto& me = s.players[player];
  if (s.phase == Phase::kFinished) return out;

  if (s.phase == Phase::kMeeting) {
    if (s.meeting->stage == MeetingStage::kDiscussion) {
      out.push_back(action::Speak{});
    } else if (s.meeting->stage == MeetingStage::kVoting) {
      for (const auto& p : s.players) {
        if (p.alive) out.push_back(action::Vote{p.id});
      }
      out.push_back(action::Vote{std::nullopt});
    }
    return out;
  }

  const auto& map = s.config.map;
  for (auto& r : map.neighbors(me.location)) out.push_back(action::Move{r});
  for (int i = 0; i < static_cast<int>(me.tasks.size()); ++i) {
    if (!me.tasks[i].done && me.tasks[i].room == me.location) {
      out.push_back(action::CompleteTask{i});
    }
  }
  if (me.role == Role::kImpostor) {
    if (s.timestep >= me.kill_ready_at) {
      for (const auto& p : s.players) {
        if (p.alive && p.role == Role::kCrewmate && p.location == me.location) {
          out.push_back(action::Kill{p.id});
        }
      }
    }
    for (auto& r : map.vent_exits(me.location)) out.push_back(action::Vent{r});
  }
  const bool body_here =
      std::any_of(s.bodies.begin(), s.bodies.end(),
                  [&](const Body& b) { return b.room == me.location; });
  if (body_here) out.push_back(action::ReportBody{});
  if (me.location == map.cafeteria && me.emergency_calls_left > 0) {
    out.push_back(action::CallEmergencyMeeting{});
  }
  return out;
}

bool is_legal(const GameState& s, PlayerId player, const Action& a) {
  if (!s.valid_player(player) || !s.players[player].alive) return false;
  const auto menu = legal_actions(s, player);
  if (std::holds_alternative<action::Speak>(a)) {
    return std::any_of(menu.begin(), menu.end(), [](const Action& m) {
      return std::holds_alternative<action::Speak>(m);
    });
  }
  return std::find(menu.begin(), menu.end(), a) != menu.end();
}

std::vector<Event> apply_action(GameState& s, PlayerId player,
                                const Action& a) {
  if (!is_legal(s, player, a)) {
    std::string tag = action_tag(a, s.player_names());
    throw IllegalActionError("illegal action for player " +
                             std::to_string(player) + ": " + tag);
  }
  const std::size_t mark = s.events.size();
  auto& me = s.players[player];
  s.events.push_back(make_event(s, event::ActionTaken{player, a}));

  if (const auto* m = std::get_if<action::Move>(&a)) {
    me.location = m->room;
  } else if (const auto* v = std::get_if<action::Vent>(&a)) {
    me.location = v->room;
  } else if (const auto* t = std::get_if<action::CompleteTask>(&a)) {
    me.tasks[t->task_index].done = true;
    s.events.push_back(make_event(
        s, event::TaskCompleted{player, t->task_index, me.location}));
    maybe_finish(s);
  } else if (const auto* k = std::get_if<action::Kill>(&a)) {
    auto& victim = s.players[k->target];
    victim.alive = false;
    s.bodies.push_back({victim.id, me.location});
    me.kill_ready_at = s.timestep + s.config.kill_cooldown;
    s.events.push_back(make_event(
        s, event::PlayerKilled{player, victim.id, me.location}));
    maybe_finish(s);
  } else if (std::holds_alternative<action::ReportBody>(a)) {
    auto body = std::find_if(s.bodies.begin(), s.bodies.end(),
                             [&](const Body& b) { return b.room == me.location; });
    start_meeting(s, player, MeetingCause::kBodyReport, body->victim);
  } else if (std::holds_alternative<action::CallEmergencyMeeting>(a)) {
    --me.emergency_calls_left;
    start_meeting(s, player, MeetingCause::kEmergency, std::nullopt);
  } else if (const auto* sp = std::get_if<action::Speak>(&a)) {
    // The ActionTaken entry is replaced by the utterance record.
    s.events.pop_back();
    auto& m = *s.meeting;
    auto u = make_utterance(s.game_id, m.meeting_index, m.discussion_round + 1,
                            player, me.role, sp->text);
    m.transcript.push_back(u);
    s.events.push_back(make_event(s, event::UtteranceMade{std::move(u)}));
  } else if (const auto* vote = std::get_if<action::Vote>(&a)) {
    s.events.pop_back();
    s.meeting->votes[player] = vote->target;
    s.events.push_back(make_event(
        s, event::VoteCast{s.meeting->meeting_index, player, vote->target}));
  }
  return tail_since(s, mark);
}

void end_discussion_round(GameState& s) {
  if (s.phase != Phase::kMeeting ||
      s.meeting->stage != MeetingStage::kDiscussion) {
    throw std::logic_error("no discussion in progress");
  }
  if (++s.meeting->discussion_round >= s.config.discussion_rounds) {
    s.meeting->stage = MeetingStage::kVoting;
  }
}

std::vector<Event> resolve_meeting(GameState& s) {
  if (s.phase != Phase::kMeeting ||
      s.meeting->stage != MeetingStage::kVoting) {
    throw std::logic_error("meeting is not in the voting stage");
  }
  const std::size_t mark = s.events.size();
  auto& m = *s.meeting;
  m.ejected = tally_votes(m.votes);
  m.stage = MeetingStage::kResolved;
  event::MeetingResolved resolved{m.meeting_index, m.ejected, std::nullopt};
  std::string text = "Meeting " + std::to_string(m.meeting_index) + ": ";
  if (m.ejected) {
    auto& out = s.players[*m.ejected];
    out.alive = false;
    resolved.revealed_role = out.role;
    text += out.name + " was ejected. " + out.name +
            (out.role == Role::kImpostor ? " was an Impostor."
                                         : " was not an Impostor.");
  } else {
    text += "No one was ejected.";
  }
  s.public_log.push_back(std::move(text));
  s.events.push_back(make_event(s, resolved));
  s.bodies.clear();
  s.meeting.reset();
  s.phase = Phase::kTask;
  maybe_finish(s);
  return tail_since(s, mark);
}

std::optional<PlayerId> tally_votes(const VoteMap& votes) {
  std::map<PlayerId, int> counts;
  int skips = 0;
  for (const auto& [voter, target] : votes) {
    if (target) {
      ++counts[*target];
    } else {
      ++skips;
    }
  }
  std::optional<PlayerId> best;
  int best_count = 0;
  bool tied = false;
  for (const auto& [target, n] : counts) {
    if (n > best_count) {
      best = target;
      best_count = n;
      tied = false;
    } else if (n == best_count) {
      tied = true;
    }
  }
  if (!best || tied || best_count <= skips) return std::nullopt;
  return best;
}

std::optional<Outcome> termination_rule(int alive_impostors, int alive_crew,
                                        bool tasks_done, int round,
                                        int max_rounds) {
  if (alive_impostors == 0) return Outcome::crew(WinReason::kAllImpostorsEjected);
  if (alive_impostors >= alive_crew) return Outcome::impostor();
  if (tasks_done) return Outcome::crew(WinReason::kAllTasksDone);
  if (round >= max_rounds) return Outcome::timeout();
  return std::nullopt;
}

std::optional<Outcome> check_termination(const GameState& s) {
  if (s.phase == Phase::kFinished) return s.outcome;
  return termination_rule(s.alive_count(Role::kImpostor),
                          s.alive_count(Role::kCrewmate),
                          s.alive_crew_tasks_done(), s.round,
                          s.config.max_rounds);
}

void finish(GameState& s, const Outcome& outcome) {
  if (s.phase == Phase::kFinished) return;
  s.phase = Phase::kFinished;
  s.meeting.reset();
  s.outcome = outcome;
  s.events.push_back(make_event(s, event::GameEnded{outcome}));
}

}  // namespace amongus
