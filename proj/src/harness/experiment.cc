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

#include "amongus/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "amongus/engine/runner.h"

namespace amongus {
namespace {

namespace fs = std::filesystem;

struct Job {
  std::size_t entry = 0;
  int repetition = 0;
};

// Write-then-rename so an interrupted run never leaves a truncated game.
void write_atomic(const fs::path& path, std::string_view text) {
  fs::path tmp = path;
  tmp += ".tmp";
  write_text_file(tmp, text);
  fs::rename(tmp, path);
}

void check_writable(const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  const fs::path probe = out / ".write_probe";
  std::ofstream f(probe);
  if (ec || !f) {
    throw std::runtime_error("output directory is not writable: " + out.string());
  }
  f.close();
  fs::remove(probe, ec);
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentPlan& plan, const fs::path& out,
                                 const RunOptions& options) {
  check_writable(out);
  write_atomic(out / "plan.json", plan_to_json(plan).dump(2) + "\n");

  std::vector<Job> jobs;
  ExperimentSummary summary;
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    const auto& entry = plan.entries[e];
    fs::create_directories(out / "games" / entry.name);
    for (int r = 0; r < entry.repetitions; ++r) {
      const fs::path file = out / "games" / entry.name / (game_id(entry, r) + ".json");
      if (fs::exists(file)) {
        ++summary.skipped;
      } else {
        jobs.push_back({e, r});
      }
    }
  }

  std::shared_ptr<const ChatClient> client;
  if (plan.roster.kind == RosterSpec::Kind::kChat) {
    client = std::make_shared<ChatClient>(plan.roster.endpoint);
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  int done = 0;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& entry = plan.entries[jobs[i].entry];
      const int rep = jobs[i].repetition;
      const std::string id = game_id(entry, rep);
      const fs::path dir = out / "games" / entry.name;
      GameConfig config = entry.config;
      config.seed = game_seed(plan.base_seed, jobs[i].entry, rep);
      std::string error;
      try {
        AgentRoster roster = make_roster(plan.roster, config, client);
        GameRecord record = run_game(config, roster, id);
        write_atomic(dir / (id + ".json"), encode_record(record) + "\n");
        fs::remove(dir / (id + ".failed.json"));
      } catch (const std::exception& ex) {
        error = ex.what();
        Json failed = {{"game_id", id}, {"seed", config.seed}, {"error", error}};
        write_atomic(dir / (id + ".failed.json"), failed.dump() + "\n");
      }
      std::lock_guard<std::mutex> lock(mu);
      if (error.empty()) {
        ++summary.generated;
      } else {
        ++summary.failed;
        summary.failures.push_back(id + ": " + error);
      }
      ++done;
      if (options.progress) options.progress(done, static_cast<int>(jobs.size()), id);
    }
  };
  const int n = std::max(1, std::min<int>(options.workers, static_cast<int>(jobs.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::sort(summary.failures.begin(), summary.failures.end());

  // Rebuild the per-config corpora from whatever game files exist.
  for (const auto& entry : plan.entries) {
    std::string jsonl;
    ConfigSummary& cs = summary.configs[entry.name];
    for (int r = 0; r < entry.repetitions; ++r) {
      const fs::path dir = out / "games" / entry.name;
      const fs::path file = dir / (game_id(entry, r) + ".json");
      if (!fs::exists(file)) {
        if (fs::exists(dir / (game_id(entry, r) + ".failed.json"))) ++cs.failed;
        continue;
      }
      std::string line = read_text_file(file);
      GameRecord rec = decode_record(line);
      ++cs.games;
      switch (rec.outcome.kind) {
        case OutcomeKind::kCrewWin:
          ++cs.crew_wins;
          break;
        case OutcomeKind::kImpostorWin:
          ++cs.impostor_wins;
          break;
        case OutcomeKind::kTimeout:
          ++cs.timeouts;
          break;
      }
      if (line.empty() || line.back() != '\n') line += '\n';
      jsonl += line;
    }
    write_atomic(out / (entry.name + ".jsonl"), jsonl);
  }
  write_atomic(out / "summary.json", summary_to_json(summary).dump(2) + "\n");
  return summary;
}

Json summary_to_json(const ExperimentSummary& summary) {
  Json configs = Json::object();
  for (const auto& [name, c] : summary.configs) {
    configs[name] = Json{{"games", c.games},
                         {"crew_wins", c.crew_wins},
                         {"impostor_wins", c.impostor_wins},
                         {"timeouts", c.timeouts},
                         {"failed", c.failed}};
  }
  return Json{{"generated", summary.generated},
              {"skipped", summary.skipped},
              {"failed", summary.failed},
              {"configs", configs},
              {"failures", summary.failures}};
}

std::vector<GameRecord> load_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  if (fs::is_regular_file(dir)) {
    files.push_back(dir);
  } else {
    if (!fs::is_directory(dir)) {
      throw std::runtime_error("corpus not found: " + dir.string());
    }
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".jsonl") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
  }
  std::vector<GameRecord> out;
  for (const auto& f : files) {
    std::istringstream in(read_text_file(f));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(decode_record(line));
    }
  }
  return out;
}

}  // namespace amongus
