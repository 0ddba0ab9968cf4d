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

#include "amongus/annotate/reliability.h"

#include <cmath>
#include <set>

namespace amongus {

AgreementResult agreement(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("agreement: label vectors differ in length");
  }
  if (a.empty()) throw std::invalid_argument("agreement: no labels");
  const double n = static_cast<double>(a.size());
  std::map<std::string, double> ma, mb;
  double same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++same;
    ma[a[i]] += 1;
    mb[b[i]] += 1;
  }
  AgreementResult out;
  out.percent = same / n;
  double pe = 0;
  for (const auto& [label, ca] : ma) {
    auto it = mb.find(label);
    if (it != mb.end()) pe += (ca / n) * (it->second / n);
  }
  if (std::abs(1.0 - pe) > 1e-15) out.kappa = (out.percent - pe) / (1.0 - pe);
  return out;
}

namespace {

std::string join_keys(const std::vector<std::string>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size() && i < 10; ++i) {
    out += (i ? ", " : "") + keys[i];
  }
  if (keys.size() > 10) out += ", ...";
  return out;
}

}  // namespace

CoverageError::CoverageError(std::vector<std::string> missing)
    : std::invalid_argument("annotation runs cover different utterances: " +
                            join_keys(missing)),
      missing_(std::move(missing)) {}

StabilityReport stability(const std::array<AnnotationRun, 3>& runs) {
  std::set<std::string> all;
  for (const auto& r : runs) {
    for (const auto& [k, v] : r.labels) all.insert(k);
  }
  std::vector<std::string> missing;
  for (const auto& k : all) {
    for (const auto& r : runs) {
      if (!r.labels.count(k)) {
        missing.push_back(k);
        break;
      }
    }
  }
  if (!missing.empty()) throw CoverageError(std::move(missing));
  if (all.empty()) throw std::invalid_argument("stability: no labels");

  StabilityReport out;
  out.items = all.size();
  std::array<std::vector<std::string>, 3> cols;
  std::size_t buckets[4] = {0, 0, 0, 0};
  for (const auto& k : all) {
    std::set<std::string> distinct;
    for (int i = 0; i < 3; ++i) {
      cols[i].push_back(runs[i].labels.at(k));
      distinct.insert(cols[i].back());
    }
    ++buckets[distinct.size()];
  }
  const double n = static_cast<double>(all.size());
  out.identical_fraction = buckets[1] / n;
  out.two_of_three_fraction = buckets[2] / n;
  out.all_differ_fraction = buckets[3] / n;
  constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p) {
    auto ag = agreement(cols[kPairs[p][0]], cols[kPairs[p][1]]);
    out.pairwise_agreement[p] = ag.percent;
    out.kappa[p] = ag.kappa;
  }
  return out;
}

std::string format_transcript(const std::vector<UtteranceRecord>& utterances,
                              const std::vector<std::string>& names) {
  std::string out;
  for (const auto& u : utterances) {
    if (u.abstention()) continue;
    const std::string who =
        u.speaker_id >= 0 && u.speaker_id < static_cast<int>(names.size())
            ? names[u.speaker_id]
            : "Player " + std::to_string(u.speaker_id);
    if (!out.empty()) out += '\n';
    out += who + ": " + u.text;
  }
  return out;
}

std::vector<ClassificationItem> collect_items(const GameRecord& record,
                                              DiscussionWindow window) {
  const auto utterances = record.utterances();
  std::vector<std::string> names;
  for (const auto& p : record.final_state.players) names.push_back(p.name);
  std::map<int, std::string> transcript;
  std::map<int, std::vector<UtteranceRecord>> by_meeting;
  for (const auto& u : utterances) by_meeting[u.meeting_index].push_back(u);
  for (const auto& [index, us] : by_meeting) {
    if (window == DiscussionWindow::kMeeting) {
      transcript[index] = format_transcript(us, names);
    } else {
      std::vector<UtteranceRecord> upto;
      for (const auto& u : utterances) {
        if (u.meeting_index <= index) upto.push_back(u);
      }
      transcript[index] = format_transcript(upto, names);
    }
  }
  std::vector<ClassificationItem> items;
  for (const auto& u : utterances) {
    if (u.abstention()) continue;
    items.push_back({u.key(), u.text, transcript[u.meeting_index]});
  }
  return items;
}

AnnotationRun annotate_items(const std::vector<ClassificationItem>& items,
                             ClassifierBackend& backend, AnnotationTask task,
                             int run_id) {
  AnnotationRun run;
  run.run_id = run_id;
  run.backend = backend.name();
  run.task = task;
  for (const auto& item : items) {
    if (task == AnnotationTask::kSpeechAct) {
      auto r = classify_speech_act(item, backend, run_id);
      run.labels[item.key] =
          r.label ? label_name(*r.label) : std::string(kUnclassifiable);
    } else {
      run.labels[item.key] = label_name(classify_deception(item, backend, run_id));
    }
  }
  return run;
}

}  // namespace amongus
