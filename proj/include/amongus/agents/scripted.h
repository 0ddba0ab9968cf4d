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
#include <memory>
#include <string>

#include "amongus/agents/agent.h"
#include "amongus/core/map.h"

namespace amongus {

// Task-phase behaviour of a scripted agent.
//   random_walker  reports bodies, does co-located tasks, otherwise wanders
//                  and occasionally calls an emergency meeting
//   task_rusher    reports bodies, does co-located tasks, otherwise walks
//                  toward the nearest undone task
//   stand_still    never acts
//   hunter         kills when legal, otherwise walks (or vents) toward the
//                  last place it saw a crewmate
//   pacifist       wanders, never kills or reports
enum class TaskPolicy { kRandomWalker, kTaskRusher, kStandStill, kHunter, kPacifist };

// Meeting behaviour.
//   accuser   names whoever it last saw where the body lay, votes the most
//             accused player (Skip when nobody is accused)
//   defender  offers an alibi, deflects onto the most accused crewmate and
//             votes for a crewmate
//   silent    abstains from speaking and votes Skip
enum class MeetingScript { kAccuser, kDefender, kSilent };

TaskPolicy task_policy_from_name(const std::string& name);
MeetingScript meeting_script_from_name(const std::string& name);
const char* task_policy_name(TaskPolicy p);
const char* meeting_script_name(MeetingScript s);

struct ScriptedSpec {
  TaskPolicy task = TaskPolicy::kTaskRusher;
  MeetingScript meeting = MeetingScript::kAccuser;
};

// Fully deterministic for a given (spec, map, seed, observation sequence).
std::unique_ptr<Agent> make_scripted_agent(ScriptedSpec spec, MapSpec map,
                                           std::uint64_t seed);

// Roles are dealt by the engine, so a roster seat does not know its role up
// front. This agent follows `crew` or `impostor` depending on the role in the
// first observation it receives.
std::unique_ptr<Agent> make_role_scripted_agent(ScriptedSpec crew,
                                                ScriptedSpec impostor,
                                                MapSpec map, std::uint64_t seed);

}  // namespace amongus
