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

#include "amongus/engine/runner.h"

#include <stdexcept>

#include "amongus/engine/rules.h"

namespace amongus {
namespace {

AgentTurn ask(Agent& agent, const Observation& obs) {
  try {
    return agent.decide(obs);
  } catch (const std::exception& e) {
    return AgentTurn::abstain(std::string("agent error: ") + e.what());
  }
}

void log_turn(GameState& s, PlayerId player, const AgentTurn& turn) {
  if (!turn.prompt.empty()) {
    s.events.push_back({s.timestep, s.round,
                        event::PromptIssued{player, turn.prompt}});
  }
  const bool annotated =
      turn.response && (!turn.response->condensed_memory.empty() ||
                        !turn.response->thinking.empty());
  if (turn.raw.empty() && !annotated) return;
  event::ResponseReceived r;
  r.player = player;
  r.parsed = turn.response.has_value();
  r.raw = turn.raw;
  if (turn.response) {
    r.condensed_memory = turn.response->condensed_memory;
    r.thinking = turn.response->thinking;
    r.action = action_tag(turn.response->action, s.player_names());
  }
  s.events.push_back({s.timestep, s.round, std::move(r)});
}

void noop(GameState& s, PlayerId player, std::string reason) {
  s.events.push_back(
      {s.timestep, s.round, event::NoOp{player, std::move(reason)}});
}

Observation observe_turn(GameState& s, PlayerId player) {
  Observation obs = observe(s, player, s.public_cursor[player]);
  s.public_cursor[player] = s.public_log.size();
  return obs;
}

Agent& agent_for(AgentRoster& agents, PlayerId player) {
  if (static_cast<std::size_t>(player) >= agents.size() || !agents[player]) {
    throw std::invalid_argument("no agent for player " +
                                std::to_string(player));
  }
  return *agents[player];
}

}  // namespace

std::string Agent::speak(const Observation& obs) {
  auto turn = decide(obs);
  if (!turn.response) return {};
  if (const auto* s = std::get_if<action::Speak>(&turn.response->action)) {
    return s->text;
  }
  return {};
}

std::optional<PlayerId> Agent::vote(const Observation& obs) {
  auto turn = decide(obs);
  if (!turn.response) return std::nullopt;
  if (const auto* v = std::get_if<action::Vote>(&turn.response->action)) {
    return v->target;
  }
  return std::nullopt;
}

void run_task_phase(GameState& s, AgentRoster& agents) {
  if (s.phase != Phase::kTask) throw std::logic_error("not in task phase");
  for (PlayerId pid : s.turn_order) {
    if (s.phase != Phase::kTask) break;
    if (!s.players[pid].alive) continue;
    Observation obs = observe_turn(s, pid);
    AgentTurn turn = ask(agent_for(agents, pid), obs);
    log_turn(s, pid, turn);
    if (!turn.response) {
      noop(s, pid, turn.reason.empty() ? "abstained" : turn.reason);
      continue;
    }
    const Action& a = turn.response->action;
    if (!is_task_phase_action(a) || !is_legal(s, pid, a)) {
      noop(s, pid, "illegal action: " + action_tag(a, obs.player_names));
      continue;
    }
    apply_action(s, pid, a);
  }
  if (s.phase != Phase::kFinished) ++s.timestep;
}

MeetingState run_meeting(GameState& s, AgentRoster& agents) {
  if (s.phase != Phase::kMeeting ||
      s.meeting->stage != MeetingStage::kDiscussion) {
    throw std::logic_error("no meeting awaiting discussion");
  }
  while (s.meeting->stage == MeetingStage::kDiscussion) {
    for (PlayerId pid : s.turn_order) {
      if (!s.players[pid].alive) continue;
      Observation obs = observe_turn(s, pid);
      AgentTurn turn = ask(agent_for(agents, pid), obs);
      log_turn(s, pid, turn);
      std::string text;
      if (turn.response) {
        if (const auto* sp = std::get_if<action::Speak>(&turn.response->action)) {
          text = sp->text;
        }
      }
      apply_action(s, pid, action::Speak{std::move(text)});
    }
    end_discussion_round(s);
  }

  // Votes are private: every voter observes the same pre-vote state.
  for (PlayerId pid : s.turn_order) {
    if (!s.players[pid].alive) continue;
    Observation obs = observe_turn(s, pid);
    AgentTurn turn = ask(agent_for(agents, pid), obs);
    log_turn(s, pid, turn);
    if (!turn.response) {
      noop(s, pid, turn.reason.empty() ? "no vote" : turn.reason);
      continue;
    }
    const Action& a = turn.response->action;
    if (!std::holds_alternative<action::Vote>(a) || !is_legal(s, pid, a)) {
      noop(s, pid, "illegal vote: " + action_tag(a, obs.player_names));
      continue;
    }
    apply_action(s, pid, a);
  }
  MeetingState held = *s.meeting;
  held.ejected = tally_votes(held.votes);
  held.stage = MeetingStage::kResolved;
  resolve_meeting(s);
  return held;
}

GameRecord run_game(const GameConfig& config, AgentRoster& agents,
                    const std::string& game_id) {
  GameState s = new_game(config, game_id);
  if (agents.size() != s.players.size()) {
    throw std::invalid_argument("roster size " + std::to_string(agents.size()) +
                                " does not match " +
                                std::to_string(s.players.size()) + " players");
  }
  if (auto o = check_termination(s)) finish(s, *o);
  while (s.phase != Phase::kFinished) {
    run_task_phase(s, agents);
    if (s.phase == Phase::kMeeting) run_meeting(s, agents);
    if (s.phase == Phase::kFinished) break;
    ++s.round;
    if (auto o = check_termination(s)) finish(s, *o);
  }
  return make_record(s);
}

GameRecord make_record(const GameState& s) {
  GameRecord r;
  r.game_id = s.game_id;
  r.config = s.config;
  r.seed = s.config.seed;
  r.events = s.events;
  r.outcome = s.outcome.value_or(Outcome::timeout());
  const int last_round = s.events.empty() ? 0 : s.events.back().round;
  r.rounds.resize(last_round + 1);
  for (int i = 0; i <= last_round; ++i) r.rounds[i].round = i;
  for (const auto& e : s.events) {
    if (std::holds_alternative<event::MeetingCalled>(e.body)) {
      ++r.rounds[e.round].discussions;
    } else if (const auto* m = std::get_if<event::MeetingResolved>(&e.body)) {
      if (m->ejected) ++r.rounds[e.round].ejections;
    }
  }
  r.final_state = snapshot(s);
  return r;
}

GameState replay_record(const GameRecord& record) {
  GameState s = new_game(record.config, record.game_id);
  auto fail = [&](const Event& e, const std::string& why) {
    return std::runtime_error("replay of " + record.game_id + " diverged at " +
                              event_type(e) + " (t=" +
                              std::to_string(e.timestep) + "): " + why);
  };
  auto discuss_until = [&](const Event& e, int round) {
    if (s.phase != Phase::kMeeting) throw fail(e, "no meeting in progress");
    while (s.meeting->stage == MeetingStage::kDiscussion &&
           s.meeting->discussion_round + 1 < round) {
      end_discussion_round(s);
    }
  };
  auto apply = [&](const Event& e, PlayerId p, const Action& a) {
    try {
      apply_action(s, p, a);
    } catch (const IllegalActionError& err) {
      throw fail(e, err.what());
    }
  };

  for (const auto& e : record.events) {
    s.timestep = e.timestep;
    s.round = e.round;
    if (const auto* a = std::get_if<event::ActionTaken>(&e.body)) {
      apply(e, a->player, a->action);
    } else if (const auto* u = std::get_if<event::UtteranceMade>(&e.body)) {
      discuss_until(e, u->utterance.discussion_round);
      apply(e, u->utterance.speaker_id, action::Speak{u->utterance.text});
    } else if (const auto* v = std::get_if<event::VoteCast>(&e.body)) {
      discuss_until(e, s.config.discussion_rounds + 1);
      apply(e, v->voter, action::Vote{v->target});
    } else if (const auto* m = std::get_if<event::MeetingResolved>(&e.body)) {
      discuss_until(e, s.config.discussion_rounds + 1);
      const auto expected = tally_votes(s.meeting->votes);
      if (expected != m->ejected) throw fail(e, "ejection differs from tally");
      resolve_meeting(s);
    } else if (const auto* g = std::get_if<event::GameEnded>(&e.body)) {
      if (g->outcome.kind == OutcomeKind::kTimeout) finish(s, g->outcome);
      if (s.outcome != g->outcome) throw fail(e, "outcome differs");
    }
  }
  s.timestep = record.final_state.timestep;
  s.round = record.final_state.round;
  return s;
}

}  // namespace amongus
