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
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "amongus/agents/chat_client.h"
#include "amongus/agents/prompt.h"
#include "amongus/agents/scripted.h"
#include "amongus/core/json_io.h"

namespace amongus {

// Who plays. Scripted rosters pick the crew or impostor policy from the role
// each seat is dealt; chat rosters send every seat to one endpoint.
struct RosterSpec {
  enum class Kind { kScripted, kChat };
  Kind kind = Kind::kScripted;
  ScriptedSpec crew{TaskPolicy::kRandomWalker, MeetingScript::kAccuser};
  ScriptedSpec impostor{TaskPolicy::kHunter, MeetingScript::kDefender};
  ChatEndpointConfig endpoint;
  PromptWindow window;
};

struct PlanEntry {
  std::string name;  // defaults to "<crew>v<impostors>"
  GameConfig config;
  int repetitions = 1;
};

struct ExperimentPlan {
  std::vector<PlanEntry> entries;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir;  // may be overridden on the command line
  RosterSpec roster;
};

// Plan JSON:
//   {"base_seed": 7, "out": "corpus",
//    "roster": {"kind": "scripted",
//               "crew": {"task": "random_walker", "meeting": "accuser"},
//               "impostor": {"task": "hunter", "meeting": "defender"}},
//    "map_file": "data/maps/default_map.json",
//    "defaults": {...GameConfig fields...},
//    "configs": [{"name": "3v1", "num_crew": 3, "num_impostors": 1,
//                 "repetitions": 100}, ...]}
// A chat roster is {"kind": "chat", "endpoint": {...}, "window": {...}}.
// Relative map_file paths resolve against the plan file's directory first,
// then the working directory. Throws ConfigError or std::invalid_argument.
// Accepts the "roster" object of a plan.
RosterSpec roster_from_json(const Json& j);

ExperimentPlan plan_from_json(const Json& j,
                              const std::filesystem::path& base_dir = {});
ExperimentPlan load_plan(const std::filesystem::path& path);
Json plan_to_json(const ExperimentPlan& plan);

// base_seed + a stable hash of (config index, repetition); wraps modulo 2^64.
std::uint64_t game_seed(std::uint64_t base_seed, std::size_t config_index,
                        int repetition);
// "<entry name>-r<repetition, zero padded to 3>"
std::string game_id(const PlanEntry& entry, int repetition);

// One agent per seat for a game of `config` (whose seed is the game seed).
AgentRoster make_roster(const RosterSpec& spec, const GameConfig& config,
                        std::shared_ptr<const ChatClient> client = nullptr);

}  // namespace amongus
