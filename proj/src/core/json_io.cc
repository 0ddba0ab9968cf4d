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

#include "amongus/core/json_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amongus {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json opt_id(const std::optional<PlayerId>& id) {
  return id ? Json(*id) : Json(nullptr);
}

std::optional<PlayerId> get_opt_id(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<PlayerId>();
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge must be a two-element array");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Json task_json(const Task& t) { return Json{{"room", t.room}, {"done", t.done}}; }

Task task_from(const Json& j) {
  return {j.at("room").get<std::string>(), j.at("done").get<bool>()};
}

Json tasks_json(const std::vector<Task>& tasks) {
  Json out = Json::array();
  for (const auto& t : tasks) out.push_back(task_json(t));
  return out;
}

std::vector<Task> tasks_from(const Json& j) {
  std::vector<Task> out;
  for (const auto& t : j) out.push_back(task_from(t));
  return out;
}

Json player_json(const PlayerState& p) {
  return Json{{"id", p.id},
              {"name", p.name},
              {"role", role_name(p.role)},
              {"location", p.location},
              {"alive", p.alive},
              {"tasks", tasks_json(p.tasks)},
              {"kill_ready_at", p.kill_ready_at},
              {"emergency_calls_left", p.emergency_calls_left}};
}

PlayerState player_from(const Json& j) {
  PlayerState p;
  p.id = j.at("id").get<int>();
  p.name = j.at("name").get<std::string>();
  p.role = role_from_name(j.at("role").get<std::string>());
  p.location = j.at("location").get<std::string>();
  p.alive = j.at("alive").get<bool>();
  p.tasks = tasks_from(j.at("tasks"));
  p.kill_ready_at = j.at("kill_ready_at").get<int>();
  p.emergency_calls_left = j.at("emergency_calls_left").get<int>();
  return p;
}

const char* cause_name(MeetingCause c) {
  return c == MeetingCause::kBodyReport ? "body_report" : "emergency";
}

MeetingCause cause_from(const std::string& s) {
  if (s == "body_report") return MeetingCause::kBodyReport;
  if (s == "emergency") return MeetingCause::kEmergency;
  throw std::invalid_argument("unknown meeting cause: " + s);
}

}  // namespace

void to_json(Json& j, const MapSpec& m) {
  j = Json{{"rooms", m.rooms},
           {"adjacency", edges_json(m.adjacency)},
           {"vents", edges_json(m.vents)},
           {"cafeteria", m.cafeteria}};
}

void from_json(const Json& j, MapSpec& m) {
  m.rooms = j.at("rooms").get<std::vector<std::string>>();
  m.adjacency = edges_from(j.at("adjacency"));
  m.vents = j.contains("vents") ? edges_from(j.at("vents")) : std::vector<Edge>{};
  m.cafeteria = j.at("cafeteria").get<std::string>();
}

void to_json(Json& j, const GameConfig& c) {
  j = Json{{"num_crew", c.num_crew},
           {"num_impostors", c.num_impostors},
           {"tasks_per_crew", c.tasks_per_crew},
           {"discussion_rounds", c.discussion_rounds},
           {"kill_cooldown", c.kill_cooldown},
           {"emergency_meetings_per_player", c.emergency_meetings_per_player},
           {"max_rounds", c.max_rounds},
           {"map", c.map},
           {"seed", c.seed}};
}

// Missing keys keep their defaults so plan files can stay terse.
void from_json(const Json& j, GameConfig& c) {
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("num_crew", c.num_crew);
  get("num_impostors", c.num_impostors);
  get("tasks_per_crew", c.tasks_per_crew);
  get("discussion_rounds", c.discussion_rounds);
  get("kill_cooldown", c.kill_cooldown);
  get("emergency_meetings_per_player", c.emergency_meetings_per_player);
  get("max_rounds", c.max_rounds);
  if (j.contains("map")) c.map = j.at("map").get<MapSpec>();
  get("seed", c.seed);
}

Json action_to_json(const Action& a) {
  Json j = Json{{"type", action_kind(a)}};
  std::visit(Overloaded{
                 [&](const action::Move& m) { j["room"] = m.room; },
                 [&](const action::CompleteTask& t) { j["task"] = t.task_index; },
                 [&](const action::Kill& k) { j["target"] = k.target; },
                 [&](const action::Vent& v) { j["room"] = v.room; },
                 [&](const action::ReportBody&) {},
                 [&](const action::CallEmergencyMeeting&) {},
                 [&](const action::Speak& s) { j["text"] = s.text; },
                 [&](const action::Vote& v) { j["target"] = opt_id(v.target); },
             },
             a);
  return j;
}

Action action_from_json(const Json& j) {
  Action a;
  const auto type = j.at("type").get<std::string>();
  if (type == "move") {
    a = action::Move{j.at("room").get<std::string>()};
  } else if (type == "complete_task") {
    a = action::CompleteTask{j.at("task").get<int>()};
  } else if (type == "kill") {
    a = action::Kill{j.at("target").get<int>()};
  } else if (type == "vent") {
    a = action::Vent{j.at("room").get<std::string>()};
  } else if (type == "report_body") {
    a = action::ReportBody{};
  } else if (type == "call_emergency_meeting") {
    a = action::CallEmergencyMeeting{};
  } else if (type == "speak") {
    a = action::Speak{j.at("text").get<std::string>()};
  } else if (type == "vote") {
    a = action::Vote{get_opt_id(j, "target")};
  } else {
    throw std::invalid_argument("unknown action type: " + type);
  }
  return a;
}

void to_json(Json& j, const UtteranceRecord& u) {
  j = Json{{"game_id", u.game_id},
           {"meeting_index", u.meeting_index},
           {"discussion_round", u.discussion_round},
           {"speaker_id", u.speaker_id},
           {"speaker_role", role_name(u.speaker_role)},
           {"text", u.text},
           {"word_count", u.word_count}};
}

void from_json(const Json& j, UtteranceRecord& u) {
  u.game_id = j.at("game_id").get<std::string>();
  u.meeting_index = j.at("meeting_index").get<int>();
  u.discussion_round = j.at("discussion_round").get<int>();
  u.speaker_id = j.at("speaker_id").get<int>();
  u.speaker_role = role_from_name(j.at("speaker_role").get<std::string>());
  u.text = j.at("text").get<std::string>();
  u.word_count = j.at("word_count").get<int>();
}

void to_json(Json& j, const Outcome& o) {
  j = Json{{"kind", outcome_name(o.kind)}, {"reason", reason_name(o.reason)}};
}

void from_json(const Json& j, Outcome& o) {
  o.kind = outcome_from_name(j.at("kind").get<std::string>());
  o.reason = reason_from_name(j.at("reason").get<std::string>());
}

void to_json(Json& j, const Event& e) {
  j = Json{{"t", e.timestep}, {"round", e.round}, {"type", event_type(e)}};
  std::visit(
      Overloaded{
          [&](const event::GameInitialized& g) {
            Json roles = Json::array();
            for (auto r : g.roles) roles.push_back(role_name(r));
            Json tasks = Json::array();
            for (const auto& t : g.tasks) tasks.push_back(tasks_json(t));
            j["names"] = g.names;
            j["roles"] = roles;
            j["turn_order"] = g.turn_order;
            j["tasks"] = tasks;
          },
          [&](const event::PromptIssued& p) {
            j["player"] = p.player;
            j["text"] = p.text;
          },
          [&](const event::ResponseReceived& r) {
            j["player"] = r.player;
            j["parsed"] = r.parsed;
            j["condensed_memory"] = r.condensed_memory;
            j["thinking"] = r.thinking;
            j["action"] = r.action;
            j["raw"] = r.raw;
          },
          [&](const event::ActionTaken& a) {
            j["player"] = a.player;
            j["action"] = action_to_json(a.action);
          },
          [&](const event::NoOp& n) {
            j["player"] = n.player;
            j["reason"] = n.reason;
          },
          [&](const event::PlayerKilled& k) {
            j["killer"] = k.killer;
            j["victim"] = k.victim;
            j["room"] = k.room;
          },
          [&](const event::TaskCompleted& t) {
            j["player"] = t.player;
            j["task"] = t.task_index;
            j["room"] = t.room;
          },
          [&](const event::MeetingCalled& m) {
            j["meeting"] = m.meeting_index;
            j["cause"] = cause_name(m.cause);
            j["caller"] = m.caller;
            j["victim"] = opt_id(m.victim);
            j["room"] = m.room;
          },
          [&](const event::UtteranceMade& u) { j["utterance"] = u.utterance; },
          [&](const event::VoteCast& v) {
            j["meeting"] = v.meeting_index;
            j["voter"] = v.voter;
            j["target"] = opt_id(v.target);
          },
          [&](const event::MeetingResolved& m) {
            j["meeting"] = m.meeting_index;
            j["ejected"] = opt_id(m.ejected);
            j["revealed_role"] =
                m.revealed_role ? Json(role_name(*m.revealed_role))
                                : Json(nullptr);
          },
          [&](const event::GameEnded& g) { j["outcome"] = g.outcome; },
      },
      e.body);
}

void from_json(const Json& j, Event& e) {
  e.timestep = j.at("t").get<int>();
  e.round = j.at("round").get<int>();
  const auto type = j.at("type").get<std::string>();
  if (type == "game_initialized") {
    event::GameInitialized g;
    g.names = j.at("names").get<std::vector<std::string>>();
    for (const auto& r : j.at("roles")) {
      g.roles.push_back(role_from_name(r.get<std::string>()));
    }
    g.turn_order = j.at("turn_order").get<std::vector<PlayerId>>();
    for (const auto& t : j.at("tasks")) g.tasks.push_back(tasks_from(t));
    e.body = std::move(g);
  } else if (type == "prompt") {
    e.body = event::PromptIssued{j.at("player").get<int>(),
                                 j.at("text").get<std::string>()};
  } else if (type == "response") {
    event::ResponseReceived r;
    r.player = j.at("player").get<int>();
    r.parsed = j.at("parsed").get<bool>();
    r.condensed_memory = j.at("condensed_memory").get<std::string>();
    r.thinking = j.at("thinking").get<std::string>();
    r.action = j.at("action").get<std::string>();
    r.raw = j.at("raw").get<std::string>();
    e.body = std::move(r);
  } else if (type == "action") {
    e.body = event::ActionTaken{j.at("player").get<int>(),
                                action_from_json(j.at("action"))};
  } else if (type == "noop") {
    e.body = event::NoOp{j.at("player").get<int>(),
                         j.at("reason").get<std::string>()};
  } else if (type == "player_killed") {
    e.body = event::PlayerKilled{j.at("killer").get<int>(),
                                 j.at("victim").get<int>(),
                                 j.at("room").get<std::string>()};
  } else if (type == "task_completed") {
    e.body = event::TaskCompleted{j.at("player").get<int>(),
                                  j.at("task").get<int>(),
                                  j.at("room").get<std::string>()};
  } else if (type == "meeting_called") {
    e.body = event::MeetingCalled{
        j.at("meeting").get<int>(), cause_from(j.at("cause").get<std::string>()),
        j.at("caller").get<int>(), get_opt_id(j, "victim"),
        j.at("room").get<std::string>()};
  } else if (type == "utterance") {
    e.body = event::UtteranceMade{j.at("utterance").get<UtteranceRecord>()};
  } else if (type == "vote") {
    e.body = event::VoteCast{j.at("meeting").get<int>(),
                             j.at("voter").get<int>(), get_opt_id(j, "target")};
  } else if (type == "meeting_resolved") {
    event::MeetingResolved m;
    m.meeting_index = j.at("meeting").get<int>();
    m.ejected = get_opt_id(j, "ejected");
    if (!j.at("revealed_role").is_null()) {
      m.revealed_role =
          role_from_name(j.at("revealed_role").get<std::string>());
    }
    e.body = m;
  } else if (type == "game_ended") {
    e.body = event::GameEnded{j.at("outcome").get<Outcome>()};
  } else {
    throw std::invalid_argument("unknown event type: " + type);
  }
}

void to_json(Json& j, const GameRecord& r) {
  Json events = Json::array();
  for (const auto& e : r.events) events.push_back(e);
  Json rounds = Json::array();
  for (const auto& c : r.rounds) {
    rounds.push_back(Json{{"round", c.round},
                          {"discussions", c.discussions},
                          {"ejections", c.ejections}});
  }
  Json players = Json::array();
  for (const auto& p : r.final_state.players) players.push_back(player_json(p));
  Json bodies = Json::array();
  for (const auto& b : r.final_state.bodies) {
    bodies.push_back(Json{{"victim", b.victim}, {"room", b.room}});
  }
  j = Json{{"game_id", r.game_id},
           {"seed", r.seed},
           {"config", r.config},
           {"outcome", r.outcome},
           {"rounds", rounds},
           {"final_state", Json{{"timestep", r.final_state.timestep},
                                {"round", r.final_state.round},
                                {"meetings_held", r.final_state.meetings_held},
                                {"players", players},
                                {"bodies", bodies}}},
           {"events", events}};
}

void from_json(const Json& j, GameRecord& r) {
  r.game_id = j.at("game_id").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config = j.at("config").get<GameConfig>();
  r.outcome = j.at("outcome").get<Outcome>();
  r.rounds.clear();
  for (const auto& c : j.at("rounds")) {
    r.rounds.push_back({c.at("round").get<int>(), c.at("discussions").get<int>(),
                        c.at("ejections").get<int>()});
  }
  const auto& fs = j.at("final_state");
  r.final_state.timestep = fs.at("timestep").get<int>();
  r.final_state.round = fs.at("round").get<int>();
  r.final_state.meetings_held = fs.at("meetings_held").get<int>();
  r.final_state.players.clear();
  for (const auto& p : fs.at("players")) {
    r.final_state.players.push_back(player_from(p));
  }
  r.final_state.bodies.clear();
  for (const auto& b : fs.at("bodies")) {
    r.final_state.bodies.push_back(
        {b.at("victim").get<int>(), b.at("room").get<std::string>()});
  }
  r.events.clear();
  for (const auto& e : j.at("events")) r.events.push_back(e.get<Event>());
}

std::string encode_record(const GameRecord& record) {
  return Json(record).dump(-1, ' ', false, Json::error_handler_t::replace);
}

GameRecord decode_record(std::string_view line) {
  return Json::parse(line).get<GameRecord>();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

MapSpec load_map_file(const std::filesystem::path& path) {
  return Json::parse(read_text_file(path)).get<MapSpec>();
}

}  // namespace amongus
