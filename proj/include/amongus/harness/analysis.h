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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amongus/core/json_io.h"
#include "amongus/harness/annotation.h"

namespace amongus {

// Per-game quantities used by the win, tempo and regression sections.
struct GameFeatures {
  std::string game_id;
  std::string config;  // "<crew>v<impostors>"
  int num_crew = 0;
  int num_impostors = 0;
  Outcome outcome;
  int rounds = 0;
  int discussions = 0;
  int ejections = 0;
  int utterances = 0;   // non-abstention
  int abstentions = 0;
  int words = 0;
  double words_per_discussion = 0.0;  // 0 without meetings
  double words_per_utterance = 0.0;   // 0 without utterances
  std::vector<int> discussion_rounds;
  std::vector<int> ejection_rounds;
};

GameFeatures game_features(const GameRecord& record);

struct AnalyzeOptions {
  int speech_run = 1;     // annotation run used for speech-act sections
  int deception_run = 1;  // annotation run used for deception sections
};

// report.json plus CSV and SVG renderings, keyed by file name.
struct AnalysisReport {
  Json report;
  std::map<std::string, std::string> files;
};

// Pure: identical inputs give identical bytes. Sections that lack data are
// marked {"status": "insufficient data"} and the rest still run.
AnalysisReport analyze(const std::vector<GameRecord>& corpus,
                       const AnnotationTable& annotations,
                       const std::optional<Json>& stability = std::nullopt,
                       const AnalyzeOptions& options = {});

// Writes report.json and every CSV/SVG under `out`.
void write_report(const AnalysisReport& report, const std::filesystem::path& out);

}  // namespace amongus
