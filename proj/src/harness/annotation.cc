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

#include "amongus/harness/annotation.h"

#include <array>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

namespace amongus {
namespace {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, std::string_view text) {
  fs::path tmp = path;
  tmp += ".tmp";
  write_text_file(tmp, text);
  fs::rename(tmp, path);
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

struct Pending {
  std::string key;
  const ClassificationItem* item = nullptr;
  AnnotationTask task = AnnotationTask::kSpeechAct;
  int run = 1;
  std::optional<std::string> reply;
};

std::string label_from_reply(AnnotationTask task, const std::optional<std::string>& reply) {
  if (task == AnnotationTask::kSpeechAct) {
    auto l = reply ? parse_speech_act(*reply) : std::nullopt;
    return l ? label_name(*l) : std::string(kUnclassifiable);
  }
  return label_name(reply ? parse_deception(*reply) : DeceptionLabel::kMissing);
}

}  // namespace

std::string annotation_column(AnnotationTask task, int run) {
  return std::string(task_name(task)) + ".run" + std::to_string(run);
}

void save_annotations(const AnnotationTable& table, const fs::path& file) {
  std::string text;
  for (const auto& [key, row] : table) {
    Json j = {{"key", row.key},
              {"game_id", row.game_id},
              {"speaker", row.speaker},
              {"role", role_name(row.role)}};
    for (const auto& [col, label] : row.labels) j[col] = label;
    text += j.dump() + "\n";
  }
  write_atomic(file, text);
}

AnnotationTable load_annotations(const fs::path& path_or_dir) {
  fs::path file = path_or_dir;
  if (fs::is_directory(file)) file /= "annotations.jsonl";
  AnnotationTable table;
  if (!fs::exists(file)) return table;
  std::istringstream in(read_text_file(file));
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j = Json::parse(line);
    AnnotationRow row;
    row.key = j.at("key").get<std::string>();
    row.game_id = j.value("game_id", std::string());
    row.speaker = j.value("speaker", 0);
    row.role = role_from_name(j.value("role", std::string("Crewmate")));
    for (const auto& [k, v] : j.items()) {
      if (k.find(".run") != std::string::npos) row.labels[k] = v.get<std::string>();
    }
    table[row.key] = std::move(row);
  }
  return table;
}

Json stability_to_json(const StabilityReport& r) {
  Json pairs = Json::array();
  const char* names[3] = {"1-2", "1-3", "2-3"};
  for (int i = 0; i < 3; ++i) {
    pairs.push_back(Json{{"pair", names[i]},
                         {"agreement", r.pairwise_agreement[i]},
                         {"kappa", optional_number(r.kappa[i])}});
  }
  return Json{{"items", r.items},
              {"identical_fraction", r.identical_fraction},
              {"two_of_three_fraction", r.two_of_three_fraction},
              {"all_differ_fraction", r.all_differ_fraction},
              {"pairs", pairs}};
}

AnnotationRun run_from_table(const AnnotationTable& table, AnnotationTask task,
                             int run) {
  AnnotationRun out;
  out.run_id = run;
  out.task = task;
  const std::string col = annotation_column(task, run);
  for (const auto& [key, row] : table) {
    if (auto it = row.labels.find(col); it != row.labels.end()) {
      out.labels[key] = it->second;
    }
  }
  return out;
}

AnnotateSummary annotate_corpus(const std::vector<GameRecord>& corpus,
                                ClassifierBackend& backend, const fs::path& out,
                                const AnnotateOptions& options) {
  if (options.runs < 1) throw std::invalid_argument("runs must be >= 1");
  fs::create_directories(out);
  const fs::path file = out / "annotations.jsonl";
  AnnotationTable table = load_annotations(file);

  // Items in corpus order; rows are created for every utterance up front.
  std::vector<ClassificationItem> items;
  for (const auto& record : corpus) {
    std::map<std::string, const UtteranceRecord*> by_key;
    const auto utterances = record.utterances();
    for (const auto& u : utterances) by_key[u.key()] = &u;
    for (auto& item : collect_items(record, options.window)) {
      const UtteranceRecord& u = *by_key.at(item.key);
      AnnotationRow& row = table[item.key];
      row.key = item.key;
      row.game_id = record.game_id;
      row.speaker = u.speaker_id;
      row.role = u.speaker_role;
      items.push_back(std::move(item));
    }
  }

  AnnotateSummary summary;
  summary.items = items.size();
  std::vector<Pending> pending;
  for (const auto& item : items) {
    for (auto task : {AnnotationTask::kSpeechAct, AnnotationTask::kDeception}) {
      for (int run = 1; run <= options.runs; ++run) {
        if (table[item.key].labels.count(annotation_column(task, run))) {
          ++summary.reused;
        } else {
          pending.push_back({item.key, &item, task, run, std::nullopt});
        }
      }
    }
  }

  const int workers = backend.thread_safe() ? std::max(1, options.workers) : 1;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.checkpoint_every));
  int streak = 0;
  std::vector<std::size_t> streak_items;
  std::size_t since_save = 0;
  for (std::size_t start = 0; start < pending.size() && !summary.aborted;
       start += batch) {
    const std::size_t end = std::min(pending.size(), start + batch);
    std::atomic<std::size_t> next{start};
    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        auto& p = pending[i];
        p.reply = backend.reply(p.task, *p.item, p.run);
      }
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < workers; ++t) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();

    // Bookkeeping in order, so the abort point does not depend on threads.
    for (std::size_t i = start; i < end; ++i) {
      const auto& p = pending[i];
      if (!p.reply) {
        ++summary.transport_failures;
        ++streak;
        streak_items.push_back(i);
        if (streak >= options.max_consecutive_failures) {
          // Drop the failed streak so a resumed run retries it.
          for (std::size_t s : streak_items) {
            table[pending[s].key].labels.erase(
                annotation_column(pending[s].task, pending[s].run));
          }
          summary.labeled -= std::min(summary.labeled, streak_items.size() - 1);
          summary.aborted = true;
          summary.notice = "backend unreachable after " + std::to_string(streak) +
                           " consecutive failures; rerun to resume";
          break;
        }
      } else {
        streak = 0;
        streak_items.clear();
      }
      table[p.key].labels[annotation_column(p.task, p.run)] =
          label_from_reply(p.task, p.reply);
      ++summary.labeled;
      ++since_save;
    }
    if (since_save >= batch || summary.aborted) {
      save_annotations(table, file);
      since_save = 0;
    }
  }
  save_annotations(table, file);
  summary.complete = !summary.aborted;

  if (summary.complete) {
    if (options.runs == 3 && !items.empty()) {
      Json st;
      for (auto task : {AnnotationTask::kSpeechAct, AnnotationTask::kDeception}) {
        std::array<AnnotationRun, 3> runs = {run_from_table(table, task, 1),
                                             run_from_table(table, task, 2),
                                             run_from_table(table, task, 3)};
        st[task_name(task)] = stability_to_json(stability(runs));
      }
      write_atomic(out / "stability.json", st.dump(2) + "\n");
      summary.stability = st;
    } else if (options.runs != 3) {
      summary.notice = "stability skipped: it needs exactly 3 runs, got " +
                       std::to_string(options.runs);
    }
  }

  Json s = {{"backend", backend.name()},
            {"runs", options.runs},
            {"window", options.window == DiscussionWindow::kMeeting ? "meeting" : "game"},
            {"items", summary.items},
            {"labeled", summary.labeled},
            {"reused", summary.reused},
            {"transport_failures", summary.transport_failures},
            {"complete", summary.complete},
            {"notice", summary.notice}};
  write_atomic(out / "annotate_summary.json", s.dump(2) + "\n");
  return summary;
}

}  // namespace amongus
