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

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amongus/annotate/classifier.h"
#include "amongus/core/event.h"

namespace amongus {

// Labels from one pass of a classifier over a set of utterances. Labels are
// stored as text (category names, "Unclassifiable" or "Missing").
struct AnnotationRun {
  int run_id = 1;
  std::string backend;
  AnnotationTask task = AnnotationTask::kSpeechAct;
  std::map<std::string, std::string> labels;  // utterance key -> label
};

struct AgreementResult {
  double percent = 0.0;          // fraction of identical labels
  std::optional<double> kappa;   // unset when chance agreement is 1
};

// Unweighted Cohen's kappa from each rater's marginals. Throws
// std::invalid_argument on empty or unequal-length input.
AgreementResult agreement(const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

class CoverageError : public std::invalid_argument {
 public:
  explicit CoverageError(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

struct StabilityReport {
  std::size_t items = 0;
  double identical_fraction = 0.0;
  double two_of_three_fraction = 0.0;
  double all_differ_fraction = 0.0;
  // Pairs in order (1,2), (1,3), (2,3).
  std::array<double, 3> pairwise_agreement{};
  std::array<std::optional<double>, 3> kappa{};
};

// Throws CoverageError naming every key not present in all three runs.
StabilityReport stability(const std::array<AnnotationRun, 3>& runs);

// Speaker-prefixed transcript lines, one per non-abstention utterance.
std::string format_transcript(const std::vector<UtteranceRecord>& utterances,
                              const std::vector<std::string>& names);

enum class DiscussionWindow { kMeeting, kGame };

// Non-abstention utterances of a game in log order. The discussion for each
// item is the full transcript of its meeting, or of every meeting up to and
// including it for kGame.
std::vector<ClassificationItem> collect_items(
    const GameRecord& record, DiscussionWindow window = DiscussionWindow::kMeeting);

// Classifies every item once. Speech-act failures are stored as
// "Unclassifiable", deception failures as "Missing".
AnnotationRun annotate_items(const std::vector<ClassificationItem>& items,
                             ClassifierBackend& backend, AnnotationTask task,
                             int run_id);

}  // namespace amongus
