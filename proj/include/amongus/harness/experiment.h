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

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "amongus/harness/plan.h"

namespace amongus {

struct RunOptions {
  int workers = 1;
  // Called after every finished game (from worker threads, serialized).
  std::function<void(int done, int total, const std::string& game_id)> progress;
};

struct ConfigSummary {
  int games = 0;
  int crew_wins = 0;
  int impostor_wins = 0;
  int timeouts = 0;
  int failed = 0;
};

struct ExperimentSummary {
  int generated = 0;
  int skipped = 0;  // already present from an earlier run
  int failed = 0;
  std::map<std::string, ConfigSummary> configs;
  std::vector<std::string> failures;  // "game_id: message"
};

// Layout under `out`:
//   games/<config>/<game_id>.json         one encoded GameRecord per file
//   games/<config>/<game_id>.failed.json  error record for a crashed game
//   <config>.jsonl                        all records of a config, in order
//   plan.json, summary.json
// Existing game files are kept, so a rerun only fills gaps. Throws
// std::runtime_error when `out` cannot be written.
ExperimentSummary run_experiment(const ExperimentPlan& plan,
                                 const std::filesystem::path& out,
                                 const RunOptions& options = {});

Json summary_to_json(const ExperimentSummary& summary);

// Every record of every <config>.jsonl directly under `dir`, files in name
// order. A single .jsonl file path is also accepted.
std::vector<GameRecord> load_corpus(const std::filesystem::path& dir);

}  // namespace amongus
