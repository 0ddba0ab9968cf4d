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

// Command-line front end: simulate, annotate, analyze, replay, mock-server.

#include <cstdio>
#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "amongus/agents/mock_chat_server.h"
#include "amongus/annotate/classifier.h"
#include "amongus/engine/rules.h"
#include "amongus/engine/runner.h"
#include "amongus/harness/analysis.h"
#include "amongus/harness/annotation.h"
#include "amongus/harness/experiment.h"
#include "amongus/harness/plan.h"

namespace fs = std::filesystem;
using amongus::Json;

namespace {

int simulate(const fs::path& plan_path, const std::string& out_arg, int workers) {
  auto plan = amongus::load_plan(plan_path);
  fs::path out = out_arg.empty() ? plan.output_dir : fs::path(out_arg);
  if (out.empty()) throw std::invalid_argument("no output directory: pass --out");
  amongus::RunOptions options;
  options.workers = workers;
  options.progress = [](int done, int total, const std::string& id) {
    if (done % 50 == 0 || done == total) {
      std::fprintf(stderr, "[%d/%d] %s\n", done, total, id.c_str());
    }
  };
  auto summary = amongus::run_experiment(plan, out, options);
  std::cout << amongus::summary_to_json(summary).dump(2) << "\n";
  return summary.failed == 0 ? 0 : 3;
}

std::unique_ptr<amongus::ClassifierBackend> make_backend(const std::string& kind,
                                                         const std::string& endpoint,
                                                         const std::string& replay) {
  if (kind == "rules") return std::make_unique<amongus::RuleClassifier>();
  if (kind == "replay") {
    if (replay.empty()) throw std::invalid_argument("--backend replay needs --labels FILE");
    return amongus::load_replay_classifier(replay);
  }
  if (endpoint.empty()) throw std::invalid_argument("--backend chat needs --endpoint FILE");
  auto cfg = amongus::Json::parse(amongus::read_text_file(endpoint))
                 .get<amongus::ChatEndpointConfig>();
  return std::make_unique<amongus::ChatClassifier>(
      std::make_shared<const amongus::ChatClient>(cfg));
}

int annotate(const fs::path& corpus_dir, const std::string& backend_kind,
             const std::string& endpoint, const std::string& replay,
             const std::string& out_arg, const std::string& window, int runs,
             int workers) {
  auto corpus = amongus::load_corpus(corpus_dir);
  auto backend = make_backend(backend_kind, endpoint, replay);
  amongus::AnnotateOptions options;
  options.runs = runs;
  options.workers = workers;
  options.window = window == "game" ? amongus::DiscussionWindow::kGame
                                    : amongus::DiscussionWindow::kMeeting;
  fs::path out = out_arg.empty() ? corpus_dir / "annotations" : fs::path(out_arg);
  auto s = amongus::annotate_corpus(corpus, *backend, out, options);
  std::fprintf(stderr, "%zu items, %zu labels written, %zu reused, %zu transport failures\n",
               s.items, s.labeled, s.reused, s.transport_failures);
  if (!s.notice.empty()) std::fprintf(stderr, "%s\n", s.notice.c_str());
  if (s.aborted) {
    std::fprintf(stderr, "backend unreachable; progress saved under %s, rerun to resume\n",
                 out.string().c_str());
    return 4;
  }
  return 0;
}

int analyze(const fs::path& corpus_dir, const fs::path& annotations,
            const fs::path& out, int speech_run, int deception_run) {
  auto corpus = amongus::load_corpus(corpus_dir);
  amongus::AnnotationTable table;
  std::optional<Json> stability;
  if (!annotations.empty()) {
    table = amongus::load_annotations(annotations);
    fs::path stab = fs::is_directory(annotations) ? annotations / "stability.json"
                                                  : annotations.parent_path() / "stability.json";
    if (fs::exists(stab)) stability = Json::parse(amongus::read_text_file(stab));
  }
  amongus::AnalyzeOptions options;
  options.speech_run = speech_run;
  options.deception_run = deception_run;
  auto report = amongus::analyze(corpus, table, stability, options);
  amongus::write_report(report, out);
  std::fprintf(stderr, "%zu games, report written to %s\n", corpus.size(),
               out.string().c_str());
  return 0;
}

int replay(const fs::path& game, bool verify) {
  std::string text = amongus::read_text_file(game);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.find('\n') != std::string::npos) {
    throw std::invalid_argument("expected one game record; got a multi-line file");
  }
  auto record = amongus::decode_record(text);
  std::printf("game %s  seed %llu  %dv%d\n", record.game_id.c_str(),
              static_cast<unsigned long long>(record.seed), record.config.num_crew,
              record.config.num_impostors);
  for (const auto& e : record.events) {
    Json j = e;
    const std::string type = j.value("type", "");
    j.erase("type");
    j.erase("t");
    j.erase("round");
    std::printf("t=%-4d r=%-3d %-18s %s\n", e.timestep, e.round, type.c_str(),
                j.dump().c_str());
  }
  std::printf("outcome %s (%s)\n", amongus::outcome_name(record.outcome.kind),
              amongus::reason_name(record.outcome.reason));
  if (verify) {
    auto state = amongus::replay_record(record);
    auto again = amongus::make_record(state);
    const bool same =
        again.outcome == record.outcome && again.final_state == record.final_state;
    std::printf("replay %s\n", same ? "matches" : "DIFFERS");
    return same ? 0 : 5;
  }
  return 0;
}

amongus::MockChatServer* g_server = nullptr;

int mock_server(const std::string& script, int port, const std::string& host) {
  amongus::MockChatScript s;
  if (!script.empty()) s = amongus::load_mock_script(script);
  amongus::MockChatServer server(s, port, host);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  std::printf("listening on %s\n", server.url().c_str());
  std::fflush(stdout);
  server.wait();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social deduction game simulator and analysis toolkit"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Run every game of an experiment plan");
  std::string plan_path, sim_out;
  int workers = 1;
  sim->add_option("--plan", plan_path, "Plan JSON")->required()->check(CLI::ExistingFile);
  sim->add_option("--out", sim_out, "Corpus directory (overrides the plan)");
  sim->add_option("--workers", workers, "Parallel games")->check(CLI::PositiveNumber);

  auto* ann = app.add_subcommand("annotate", "Label corpus utterances");
  std::string corpus, backend = "rules", endpoint, labels, ann_out, window = "meeting";
  int runs = 3, ann_workers = 1;
  ann->add_option("--corpus", corpus, "Corpus directory")->required()->check(CLI::ExistingPath);
  ann->add_option("--backend", backend, "Classifier backend")
      ->check(CLI::IsMember({"chat", "rules", "replay"}));
  ann->add_option("--runs", runs, "Independent runs per task")->check(CLI::PositiveNumber);
  ann->add_option("--endpoint", endpoint, "Chat endpoint JSON (chat backend)")
      ->check(CLI::ExistingFile);
  ann->add_option("--labels", labels, "Recorded labels JSONL (replay backend)")
      ->check(CLI::ExistingFile);
  ann->add_option("--out", ann_out, "Annotation directory (default CORPUS/annotations)");
  ann->add_option("--window", window, "Deception context")
      ->check(CLI::IsMember({"meeting", "game"}));
  ann->add_option("--workers", ann_workers, "Parallel requests")->check(CLI::PositiveNumber);

  auto* ana = app.add_subcommand("analyze", "Compute the statistical report");
  std::string ana_corpus, annotations, report_out = "report";
  int speech_run = 1, deception_run = 1;
  ana->add_option("--corpus", ana_corpus, "Corpus directory")->required()->check(CLI::ExistingPath);
  ana->add_option("--annotations", annotations, "Annotation directory or JSONL");
  ana->add_option("--out", report_out, "Report directory");
  ana->add_option("--speech-run", speech_run, "Annotation run for speech acts");
  ana->add_option("--deception-run", deception_run, "Annotation run for deception");

  auto* rep = app.add_subcommand("replay", "Print a game's event log");
  std::string game;
  bool verify = false;
  rep->add_option("--game", game, "Game record JSON")->required()->check(CLI::ExistingFile);
  rep->add_flag("--verify", verify, "Re-apply the logged inputs and compare the end state");

  auto* mock = app.add_subcommand("mock-server", "Serve a local chat-completion stub");
  std::string script, host = "127.0.0.1";
  int port = 8089;
  mock->add_option("--script", script, "Mock script JSON")->check(CLI::ExistingFile);
  mock->add_option("--port", port, "Port (0 picks one)");
  mock->add_option("--host", host, "Bind address");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*sim) return simulate(plan_path, sim_out, workers);
    if (*ann) {
      return annotate(corpus, backend, endpoint, labels, ann_out, window, runs, ann_workers);
    }
    if (*ana) return analyze(ana_corpus, annotations, report_out, speech_run, deception_run);
    if (*rep) return replay(game, verify);
    if (*mock) return mock_server(script, port, host);
  } catch (const amongus::ConfigError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
