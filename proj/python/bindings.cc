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

// Python bindings. Structured values cross the boundary as JSON text; the
// package's __init__ turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amongus/annotate/classifier.h"
#include "amongus/annotate/labels.h"
#include "amongus/annotate/prompts.h"
#include "amongus/engine/rules.h"
#include "amongus/engine/runner.h"
#include "amongus/harness/analysis.h"
#include "amongus/harness/annotation.h"
#include "amongus/harness/experiment.h"
#include "amongus/harness/plan.h"
#include "amongus/stats/distributions.h"
#include "amongus/stats/logistic.h"
#include "amongus/stats/tests.h"

namespace py = pybind11;
namespace fs = std::filesystem;

namespace amongus {
namespace {

std::string run_game_json(const std::string& config_json, const std::string& roster_json,
                          const std::string& game_id) {
  GameConfig config = Json::parse(config_json).get<GameConfig>();
  RosterSpec spec = roster_from_json(Json::parse(roster_json));
  std::shared_ptr<const ChatClient> client;
  if (spec.kind == RosterSpec::Kind::kChat) {
    client = std::make_shared<const ChatClient>(spec.endpoint);
  }
  AgentRoster roster = make_roster(spec, config, client);
  py::gil_scoped_release release;
  return encode_record(run_game(config, roster, game_id));
}

std::string replay_json(const std::string& record_json) {
  GameRecord record = decode_record(record_json);
  return encode_record(make_record(replay_record(record)));
}

std::string simulate_json(const std::string& plan_path, const std::string& out, int workers) {
  ExperimentPlan plan = load_plan(plan_path);
  fs::path dir = out.empty() ? plan.output_dir : fs::path(out);
  if (dir.empty()) throw std::invalid_argument("no output directory");
  RunOptions options;
  options.workers = workers;
  py::gil_scoped_release release;
  return summary_to_json(run_experiment(plan, dir, options)).dump();
}

std::string annotate_json(const std::string& corpus_dir, const std::string& out,
                          const std::string& backend_kind, int runs, const std::string& labels,
                          const std::string& endpoint, const std::string& window) {
  std::unique_ptr<ClassifierBackend> backend;
  if (backend_kind == "rules") {
    backend = std::make_unique<RuleClassifier>();
  } else if (backend_kind == "replay") {
    backend = load_replay_classifier(labels);
  } else if (backend_kind == "chat") {
    auto cfg = Json::parse(read_text_file(endpoint)).get<ChatEndpointConfig>();
    backend = std::make_unique<ChatClassifier>(std::make_shared<const ChatClient>(cfg));
  } else {
    throw std::invalid_argument("unknown backend: " + backend_kind);
  }
  AnnotateOptions options;
  options.runs = runs;
  options.window = window == "game" ? DiscussionWindow::kGame : DiscussionWindow::kMeeting;
  const auto corpus = load_corpus(corpus_dir);
  py::gil_scoped_release release;
  auto s = annotate_corpus(corpus, *backend, out.empty() ? fs::path(corpus_dir) / "annotations"
                                                         : fs::path(out),
                           options);
  Json j = {{"items", s.items},       {"labeled", s.labeled},
            {"reused", s.reused},     {"transport_failures", s.transport_failures},
            {"complete", s.complete}, {"aborted", s.aborted},
            {"notice", s.notice}};
  j["stability"] = s.stability ? *s.stability : Json();
  return j.dump();
}

std::string analyze_json(const std::string& corpus_dir, const std::string& annotations,
                         const std::string& out, int speech_run, int deception_run) {
  const auto corpus = load_corpus(corpus_dir);
  AnnotationTable table;
  std::optional<Json> stability;
  if (!annotations.empty()) {
    table = load_annotations(annotations);
    fs::path a(annotations);
    fs::path stab = fs::is_directory(a) ? a / "stability.json" : a.parent_path() / "stability.json";
    if (fs::exists(stab)) stability = Json::parse(read_text_file(stab));
  }
  AnalyzeOptions options{speech_run, deception_run};
  auto report = analyze(corpus, table, stability, options);
  if (!out.empty()) write_report(report, out);
  return report.report.dump();
}

std::optional<std::string> termination_json(int impostors, int crew, bool tasks_done,
                                            int round, int max_rounds) {
  auto o = termination_rule(impostors, crew, tasks_done, round, max_rounds);
  if (!o) return std::nullopt;
  return Json(*o).dump();
}

std::optional<PlayerId> tally(const std::map<PlayerId, std::optional<PlayerId>>& ballots) {
  VoteMap votes;
  for (const auto& [voter, target] : ballots) votes[voter] = target;
  return tally_votes(votes);
}

py::dict fit_dict(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                  const std::vector<std::string>& names) {
  auto f = stats::logistic_fit(x, y, names);
  py::dict d;
  d["names"] = f.names;
  d["beta"] = f.beta;
  d["se"] = f.se;
  d["ci_low"] = f.ci_low;
  d["ci_high"] = f.ci_high;
  d["z"] = f.z;
  d["p"] = f.p;
  d["converged"] = f.converged;
  d["separation"] = f.separation;
  d["log_likelihood"] = f.log_likelihood;
  d["warnings"] = f.warnings;
  return d;
}

}  // namespace
}  // namespace amongus

PYBIND11_MODULE(_core, m) {
  using namespace amongus;
  m.doc() = "Native core of amongus_sim.";

  m.def("run_game", &run_game_json, py::arg("config_json"), py::arg("roster_json") = "{}",
        py::arg("game_id") = "game");
  m.def("replay", &replay_json, py::arg("record_json"));
  m.def("simulate", &simulate_json, py::arg("plan"), py::arg("out") = "", py::arg("workers") = 1);
  m.def("annotate", &annotate_json, py::arg("corpus"), py::arg("out") = "",
        py::arg("backend") = "rules", py::arg("runs") = 3, py::arg("labels") = "",
        py::arg("endpoint") = "", py::arg("window") = "meeting");
  m.def("analyze", &analyze_json, py::arg("corpus"), py::arg("annotations") = "",
        py::arg("out") = "", py::arg("speech_run") = 1, py::arg("deception_run") = 1);
  m.def("termination", &termination_json, py::arg("impostors"), py::arg("crew"),
        py::arg("tasks_done"), py::arg("round"), py::arg("max_rounds"));
  m.def("tally_votes", &tally, py::arg("ballots"));

  m.def("normalize_label", [](const std::string& s) { return normalize_label(s); });
  m.def("speech_act_template", [] { return std::string(speech_act_template()); });
  m.def("deception_template", [] { return std::string(deception_template()); });

  m.def("chi2_sf", &stats::chi2_sf, py::arg("x"), py::arg("df"));
  m.def("normal_sf", &stats::normal_sf, py::arg("z"));
  m.def("t_two_sided", &stats::student_t_two_sided, py::arg("t"), py::arg("df"));
  m.def("chi_squared", [](const std::vector<std::vector<double>>& t) {
    auto r = stats::chi_squared(t);
    return py::make_tuple(r.statistic, r.df, r.p);
  });
  m.def("two_prop_z", [](double k1, double n1, double k2, double n2) {
    auto r = stats::two_prop_z(k1, n1, k2, n2);
    return py::make_tuple(r.z, r.p);
  });
  m.def("odds_ratio", [](double a, double b, double c, double d) {
    auto r = stats::odds_ratio(a, b, c, d);
    return py::make_tuple(r.odds_ratio, r.ci_low, r.ci_high);
  });
  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) {
    auto r = stats::spearman(x, y);
    return py::make_tuple(r.rho, r.p);
  });
  m.def("logistic_fit", &fit_dict, py::arg("x"), py::arg("y"), py::arg("names"));

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<stats::CollinearityError>(m, "CollinearityError", PyExc_ValueError);
}
