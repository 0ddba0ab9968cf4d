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

#include "amongus/annotate/reliability.h"
#include "amongus/core/json_io.h"

namespace amongus {

// Column name for a (task, run) pair, e.g. "speech_act.run2".
std::string annotation_column(AnnotationTask task, int run);

// One row per non-abstention utterance.
struct AnnotationRow {
  std::string key;
  std::string game_id;
  PlayerId speaker = 0;
  Role role = Role::kCrewmate;
  std::map<std::string, std::string> labels;  // column -> label
};

// Rows keyed by utterance key.
using AnnotationTable = std::map<std::string, AnnotationRow>;

struct AnnotateOptions {
  int runs = 3;
  DiscussionWindow window = DiscussionWindow::kMeeting;
  // This many transport failures in a row means the backend is unreachable:
  // progress so far is saved and the run stops (rerun to resume).
  int max_consecutive_failures = 5;
  int workers = 1;  // honoured only for thread-safe backends
  int checkpoint_every = 200;  // rows between saves
};

struct AnnotateSummary {
  std::size_t items = 0;
  std::size_t labeled = 0;   // (item, column) pairs written this call
  std::size_t reused = 0;    // pairs already present
  std::size_t transport_failures = 0;
  bool complete = false;
  bool aborted = false;
  std::string notice;
  std::optional<Json> stability;
};

// Writes <out>/annotations.jsonl, <out>/annotate_summary.json and, for
// exactly three runs, <out>/stability.json. Labels already present in
// annotations.jsonl are kept.
AnnotateSummary annotate_corpus(const std::vector<GameRecord>& corpus,
                                ClassifierBackend& backend,
                                const std::filesystem::path& out,
                                const AnnotateOptions& options = {});

AnnotationTable load_annotations(const std::filesystem::path& path_or_dir);
void save_annotations(const AnnotationTable& table,
                      const std::filesystem::path& file);

Json stability_to_json(const StabilityReport& report);

// The AnnotationRun stored in `column` of the table.
AnnotationRun run_from_table(const AnnotationTable& table, AnnotationTask task,
                             int run);

}  // namespace amongus
