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
#include <random>
#include <string>
#include <vector>

#include "amongus/agents/scripted.h"
#include "amongus/core/event.h"
#include "amongus/engine/rules.h"
#include "amongus/harness/annotation.h"

namespace amongus::testing {

// Brute-force tally: count every ballot, then eject the single top named
// target if it beats every other target and the Skip pile.
std::optional<PlayerId> tally_oracle(const VoteMap& votes);

// Rule table written out case by case.
std::optional<Outcome> termination_oracle(int impostors, int crew, bool tasks_done,
                                          int round, int max_rounds);

// Composite Simpson integration of the density; slow but independent of the
// special-function code.
double chi2_sf_oracle(double x, double df);
double normal_sf_oracle(double z);
double t_two_sided_oracle(double t, double df);

// One scripted game.
GameRecord play_scripted(const GameConfig& config, ScriptedSpec crew,
                         ScriptedSpec impostor, const std::string& id = "game");

// A 3v1 record holding only the utterance events for keys
// fixture/m1/r{1..3}/p{0..3}, first ten in order. Matches the labels in
// data/fixtures/stability_labels.jsonl.
GameRecord fixture_record();

// Records with planted structure: crew win odds fall with impostor count,
// 90% of deception labels are Equivocation and 96% of speech acts are
// Directives. Labels go in column run 1 of both tasks.
struct PlantedCorpus {
  std::vector<GameRecord> games;
  AnnotationTable annotations;
  double equivocation_share = 0.90;
  double directive_share = 0.96;
};
PlantedCorpus planted_corpus(int games, std::uint64_t seed);

// Uniform double in [0, 1).
inline double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace amongus::testing
