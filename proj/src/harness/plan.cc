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

#include "amongus/harness/plan.h"

#include <cstdio>
#include <stdexcept>

#include "amongus/agents/chat_agent.h"
#include "amongus/core/random.h"
#include "amongus/engine/rules.h"

namespace amongus {
namespace {

ScriptedSpec scripted_from_json(const Json& j, ScriptedSpec fallback) {
  if (j.contains("task")) fallback.task = task_policy_from_name(j.at("task"));
  if (j.contains("meeting")) {
    fallback.meeting = meeting_script_from_name(j.at("meeting"));
  }
  return fallback;
}

Json scripted_to_json(const ScriptedSpec& s) {
  return Json{{"task", task_policy_name(s.task)},
              {"meeting", meeting_script_name(s.meeting)}};
}

std::filesystem::path resolve(const std::filesystem::path& p,
                              const std::filesystem::path& base_dir) {
  if (p.is_absolute() || base_dir.empty()) return p;
  auto candidate = base_dir / p;
  return std::filesystem::exists(candidate) ? candidate : p;
}

}  // namespace

RosterSpec roster_from_json(const Json& r) {
  RosterSpec spec;
  const std::string kind = r.value("kind", std::string("scripted"));
  if (kind == "scripted") {
    spec.kind = RosterSpec::Kind::kScripted;
    if (r.contains("crew")) {
      spec.crew = scripted_from_json(r.at("crew"), spec.crew);
    }
    if (r.contains("impostor")) {
      spec.impostor =
          scripted_from_json(r.at("impostor"), spec.impostor);
    }
  } else if (kind == "chat") {
    spec.kind = RosterSpec::Kind::kChat;
    spec.endpoint = r.at("endpoint").get<ChatEndpointConfig>();
    if (r.contains("window")) {
      const Json& w = r.at("window");
      spec.window.max_public_events =
          w.value("max_public_events", spec.window.max_public_events);
      spec.window.max_transcript =
          w.value("max_transcript", spec.window.max_transcript);
    }
  } else {
    throw std::invalid_argument("unknown roster kind: " + kind);
  }
  return spec;
}

ExperimentPlan plan_from_json(const Json& j, const std::filesystem::path& base_dir) {
  ExperimentPlan plan;
  plan.base_seed = j.value("base_seed", std::uint64_t{0});
  if (j.contains("out")) plan.output_dir = j.at("out").get<std::string>();

  if (j.contains("roster")) plan.roster = roster_from_json(j.at("roster"));

  GameConfig defaults;
  if (j.contains("defaults")) defaults = j.at("defaults").get<GameConfig>();
  if (j.contains("map_file")) {
    defaults.map = load_map_file(resolve(j.at("map_file").get<std::string>(), base_dir));
  }

  if (!j.contains("configs") || j.at("configs").empty()) {
    throw std::invalid_argument("plan has no configs");
  }
  for (const Json& c : j.at("configs")) {
    PlanEntry e;
    Json merged = defaults;
    for (const auto& [k, v] : c.items()) {
      if (k != "name" && k != "repetitions") merged[k] = v;
    }
    e.config = merged.get<GameConfig>();
    e.repetitions = c.value("repetitions", 1);
    if (e.repetitions < 1) {
      throw std::invalid_argument("repetitions must be >= 1");
    }
    e.name = c.value("name", std::to_string(e.config.num_crew) + "v" +
                                 std::to_string(e.config.num_impostors));
    auto issues = validate_config(e.config);
    if (has_violations(issues)) throw ConfigError(issues);
    for (const auto& other : plan.entries) {
      if (other.name == e.name) {
        throw std::invalid_argument("duplicate config name: " + e.name);
      }
    }
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  return plan_from_json(Json::parse(read_text_file(path)), path.parent_path());
}

Json plan_to_json(const ExperimentPlan& plan) {
  Json j;
  j["base_seed"] = plan.base_seed;
  j["out"] = plan.output_dir.string();
  Json roster;
  if (plan.roster.kind == RosterSpec::Kind::kScripted) {
    roster["kind"] = "scripted";
    roster["crew"] = scripted_to_json(plan.roster.crew);
    roster["impostor"] = scripted_to_json(plan.roster.impostor);
  } else {
    roster["kind"] = "chat";
    roster["endpoint"] = plan.roster.endpoint;
    roster["window"] = Json{{"max_public_events", plan.roster.window.max_public_events},
                            {"max_transcript", plan.roster.window.max_transcript}};
  }
  j["roster"] = roster;
  Json configs = Json::array();
  for (const auto& e : plan.entries) {
    Json c = e.config;
    c.erase("seed");
    Json row = {{"name", e.name}, {"repetitions", e.repetitions}};
    for (const auto& [k, v] : c.items()) row[k] = v;
    configs.push_back(row);
  }
  j["configs"] = configs;
  return j;
}

std::uint64_t game_seed(std::uint64_t base_seed, std::size_t config_index,
                        int repetition) {
  return base_seed + mix_seed(config_index, static_cast<std::uint64_t>(repetition));
}

std::string game_id(const PlanEntry& entry, int repetition) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", repetition);
  return entry.name + "-r" + buf;
}

AgentRoster make_roster(const RosterSpec& spec, const GameConfig& config,
                        std::shared_ptr<const ChatClient> client) {
  AgentRoster roster;
  for (int i = 0; i < config.num_players(); ++i) {
    if (spec.kind == RosterSpec::Kind::kScripted) {
      roster.push_back(make_role_scripted_agent(
          spec.crew, spec.impostor, config.map,
          mix_seed(config.seed, static_cast<std::uint64_t>(i) + 1)));
    } else {
      if (!client) client = std::make_shared<ChatClient>(spec.endpoint);
      roster.push_back(std::make_unique<ChatAgent>(client, spec.window));
    }
  }
  return roster;
}

}  // namespace amongus
