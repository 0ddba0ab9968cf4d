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

// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "amongus/agents/chat_client.h"
#include "amongus/agents/mock_chat_server.h"
#include "amongus/annotate/classifier.h"
#include "amongus/annotate/labels.h"
#include "amongus/annotate/prompts.h"
#include "amongus/annotate/reliability.h"
#include "amongus/core/json_io.h"
#include "amongus/engine/runner.h"
#include "amongus/harness/analysis.h"
#include "amongus/harness/plan.h"
#include "amongus/stats/distributions.h"
#include "amongus/stats/logistic.h"
#include "amongus/stats/tests.h"
#include "support.h"

namespace amongus {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++count_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s << std::setprecision(15) << what << ": got " << got << ", want " << want << " +/- " << tol;
    expect(std::fabs(got - want) <= tol, s.str());
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " failed";
    for (const auto& f : failures_) s += "\n      " + f;
    return s;
  }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string engine_oracles(Check& c) {
  const auto start = Clock::now();
  long states = 0, ballots = 0;
  // Termination over real states: i impostors, c crew alive, task flag, round.
  for (int imps = 0; imps <= 8; ++imps) {
    for (int crew = 0; crew <= 8; ++crew) {
      for (int done = 0; done <= 1; ++done) {
        for (int round : {0, 50, 99, 100}) {
          GameState s;
          s.config.max_rounds = 100;
          s.round = round;
          PlayerId id = 0;
          auto add = [&](Role role, bool alive) {
            PlayerState p;
            p.id = id++;
            p.role = role;
            p.alive = alive;
            if (role == Role::kCrewmate) p.tasks = {{"Admin", done == 1}, {"O2", done == 1}};
            s.players.push_back(p);
          };
          for (int k = 0; k < imps; ++k) add(Role::kImpostor, true);
          for (int k = 0; k < crew; ++k) add(Role::kCrewmate, true);
          add(Role::kCrewmate, false);  // a corpse with unfinished tasks
          s.players.back().tasks = {{"Admin", false}};
          const auto want = testing::termination_oracle(imps, crew, done == 1, round, 100);
          c.expect(check_termination(s) == want,
                   "check_termination i=" + std::to_string(imps) + " c=" + std::to_string(crew));
          c.expect(termination_rule(imps, crew, done == 1, round, 100) == want,
                   "termination_rule i=" + std::to_string(imps));
          ++states;
        }
      }
    }
  }
  // Every ballot of up to five voters over five candidates plus Skip.
  for (int voters = 0; voters <= 5; ++voters) {
    int total = 1;
    for (int k = 0; k < voters; ++k) total *= 6;
    for (int code = 0; code < total; ++code) {
      VoteMap v;
      int x = code;
      for (int voter = 0; voter < voters; ++voter, x /= 6) {
        v[voter] = x % 6 == 5 ? std::nullopt : std::optional<PlayerId>(x % 6);
      }
      c.expect(tally_votes(v) == testing::tally_oracle(v), "tally code " + std::to_string(code));
      ++ballots;
    }
  }
  const double secs = seconds_since(start);
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  return std::to_string(states) + " termination states, " + std::to_string(ballots) +
         " ballots, " + std::to_string(secs).substr(0, 5) + " s";
}

std::string determinism(Check& c) {
  RosterSpec spec;
  for (int i = 0; i < 20; ++i) {
    GameConfig cfg;
    cfg.seed = game_seed(2026, 0, i);
    auto run = [&] {
      auto roster = make_roster(spec, cfg);
      return encode_record(run_game(cfg, roster, "det-" + std::to_string(i)));
    };
    c.expect(run() == run(), "game " + std::to_string(i) + " differs on rerun");
  }
  return "20 games of 3v1";
}

std::string throughput(Check& c) {
  const std::pair<int, int> sizes[] = {{3, 1}, {6, 1}, {5, 2}, {5, 3}};
  const auto start = Clock::now();
  RosterSpec spec;
  std::string detail;
  std::size_t index = 0;
  for (const auto& [crew, imps] : sizes) {
    int timeouts = 0, other = 0;
    for (int rep = 0; rep < 100; ++rep) {
      GameConfig cfg;
      cfg.num_crew = crew;
      cfg.num_impostors = imps;
      cfg.seed = game_seed(7, index, rep);
      auto roster = make_roster(spec, cfg);
      const auto r = run_game(cfg, roster);
      timeouts += r.outcome.kind == OutcomeKind::kTimeout;
      other += r.outcome.kind != OutcomeKind::kTimeout &&
               r.outcome.kind != OutcomeKind::kCrewWin &&
               r.outcome.kind != OutcomeKind::kImpostorWin;
    }
    const std::string name = std::to_string(crew) + "v" + std::to_string(imps);
    c.expect(timeouts < 5, name + " timeouts " + std::to_string(timeouts) + "/100");
    c.expect(other == 0, name + " has unknown outcomes");
    detail += name + " timeouts " + std::to_string(timeouts) + "%, ";
    ++index;
  }
  const double secs = seconds_since(start);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return detail + std::to_string(secs).substr(0, 5) + " s for 400 games";
}

std::string statistics(Check& c) {
  // Saturated 2x2 logistic.
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  auto add = [&](double xv, int wins, int losses) {
    for (int i = 0; i < wins + losses; ++i) {
      x.push_back({xv});
      y.push_back(i < wins ? 1 : 0);
    }
  };
  add(1, 30, 20);
  add(0, 10, 40);
  auto fit = stats::logistic_fit(x, y, {"x"});
  c.near(fit.beta[0], std::log(10.0 / 40.0), 1e-6, "intercept");
  c.near(fit.beta[1], std::log(30.0 * 40 / (20.0 * 10)), 1e-6, "beta");

  // Test statistics against hand values.
  auto chi = stats::chi_squared({{10, 20}, {20, 10}});
  c.near(chi.statistic, 20.0 / 3, 1e-6, "chi2");
  c.near(stats::chi_squared({{5, 0}, {0, 5}}).statistic, 10.0, 1e-6, "chi2 diagonal");
  c.near(stats::two_prop_z(60, 100, 40, 100).z, 0.2 / std::sqrt(0.005), 1e-6, "z");
  auto orr = stats::odds_ratio(10, 20, 5, 40);
  c.near(orr.odds_ratio, 4.0, 1e-6, "odds ratio");
  c.near(orr.ci_low, std::exp(std::log(4.0) - 1.96 * std::sqrt(0.375)), 1e-6, "OR low");
  c.near(orr.ci_high, std::exp(std::log(4.0) + 1.96 * std::sqrt(0.375)), 1e-6, "OR high");
  c.near(stats::spearman({1, 2, 3, 4}, {2, 1, 4, 3}).rho, 0.6, 1e-6, "spearman");
  c.near(stats::spearman({1, 2, 3}, {3, 2, 1}).rho, -1.0, 1e-6, "spearman reversed");

  // p-values against numerical integration.
  int points = 0;
  for (double df : {1.0, 2.0, 3.0, 5.0, 10.0}) {
    for (double v : {0.2, 1.0, 3.0, 6.0, 12.0}) {
      c.near(stats::chi2_sf(v, df), testing::chi2_sf_oracle(v, df), 1e-8, "chi2 tail");
      c.near(stats::student_t_two_sided(v / 2, df), testing::t_two_sided_oracle(v / 2, df),
             1e-8, "t tail");
      points += 2;
    }
  }
  for (double z = -5; z <= 5; z += 0.5) {
    c.near(stats::normal_sf(z), testing::normal_sf_oracle(z), 1e-8, "normal tail");
    ++points;
  }

  // Finite-difference gradient at a fitted optimum.
  std::mt19937_64 rng(101);
  std::vector<std::vector<double>> xs;
  std::vector<double> ys;
  for (int i = 0; i < 400; ++i) {
    const double a = testing::unit(rng) * 4 - 2, b = static_cast<double>(rng() % 4);
    xs.push_back({a, b});
    ys.push_back(testing::unit(rng) < 1 / (1 + std::exp(-(0.2 + a - 0.5 * b))) ? 1 : 0);
  }
  auto f2 = stats::logistic_fit(xs, ys, {"a", "b"});
  Eigen::MatrixXd m(400, 3);
  Eigen::VectorXd yy(400);
  for (int i = 0; i < 400; ++i) {
    m(i, 0) = 1;
    m(i, 1) = xs[static_cast<std::size_t>(i)][0];
    m(i, 2) = xs[static_cast<std::size_t>(i)][1];
    yy[i] = ys[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd beta = Eigen::Map<const Eigen::VectorXd>(f2.beta.data(), 3);
  double norm2 = 0;
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXd up = beta, down = beta;
    up[j] += 1e-5;
    down[j] -= 1e-5;
    const double g =
        (stats::log_likelihood(m, yy, up) - stats::log_likelihood(m, yy, down)) / 2e-5;
    norm2 += g * g;
  }
  c.expect(std::sqrt(norm2) < 1e-6, "gradient norm " + std::to_string(std::sqrt(norm2)));
  std::ostringstream s;
  s << points << " p-value points, gradient norm " << std::scientific << std::setprecision(2)
    << std::sqrt(norm2);
  return s.str();
}

std::string annotation_math(Check& c) {
  auto replay = load_replay_classifier("data/fixtures/stability_labels.jsonl");
  auto items = collect_items(testing::fixture_record());
  std::string detail;
  for (auto task : {AnnotationTask::kSpeechAct, AnnotationTask::kDeception}) {
    auto s = stability({annotate_items(items, *replay, task, 1),
                        annotate_items(items, *replay, task, 2),
                        annotate_items(items, *replay, task, 3)});
    c.expect(s.identical_fraction == 0.4 && s.two_of_three_fraction == 0.5 &&
                 s.all_differ_fraction == 0.1,
             std::string(task_name(task)) + " stability fractions");
  }
  auto k = agreement({"A", "A", "B", "B"}, {"A", "B", "B", "B"});
  c.expect(k.kappa.has_value(), "kappa defined");
  if (k.kappa) c.near(*k.kappa, 0.5, 1e-12, "kappa");

  int rows = 0;
  auto check_label = [&](const std::string& reply, const std::string& want) {
    c.expect(normalize_label(reply) == want, "normalize [" + reply + "]");
    ++rows;
  };
  std::vector<std::string> names;
  for (auto l : kAllSpeechActs) names.push_back(label_name(l));
  for (auto l : {DeceptionLabel::kFalsification, DeceptionLabel::kConcealment,
                 DeceptionLabel::kEquivocation}) {
    names.push_back(label_name(l));
  }
  for (const auto& name : names) {
    std::string lower = name, upper = name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(ch));
    const std::string single = name.back() == 's' ? name.substr(0, name.size() - 1) : name;
    for (const auto& base : {name, lower, upper, single}) {
      for (const auto& [pre, post] : std::vector<std::pair<std::string, std::string>>{
               {"", ""}, {"", " "}, {" ", "\n"}, {"", "."}, {"\"", "\""}, {"**", "**"},
               {"", " (gloss)"}}) {
        check_label(pre + base + post, name);
      }
    }
  }
  for (const char* bad : {"banana", "", "Directives and Representatives", "Lying"}) {
    check_label(bad, "");
  }
  detail = "fixture (0.4, 0.5, 0.1), kappa 0.5, " + std::to_string(rows) + " normalization rows";
  return detail;
}

const Json* coefficient(const Json& section, const std::string& name) {
  if (!section.contains("coefficients")) return nullptr;
  for (const auto& c : section["coefficients"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

std::string planted(Check& c) {
  auto corpus = testing::planted_corpus(2200, 2026);
  auto report = analyze(corpus.games, corpus.annotations).report;
  const auto* imp = coefficient(report["crew_win_regression"], "num_impostors");
  c.expect(imp != nullptr, "num_impostors coefficient present");
  double beta = 0, hi = 0;
  if (imp) {
    beta = (*imp)["beta"];
    hi = (*imp)["ci_high"];
    c.expect(beta < 0 && hi < 0, "beta(num_impostors) < 0 with CI excluding 0");
  }
  const double eq = report["deception"]["all"]["Equivocation"]["proportion"];
  const double dir = report["speech_acts_by_role"]["overall"]["Directives"]["proportion"];
  c.near(eq, corpus.equivocation_share, 0.005, "equivocation share");
  c.near(dir, corpus.directive_share, 0.005, "directive share");
  c.expect(dir >= 0.95, "directives at least 95%");
  std::ostringstream s;
  s << std::setprecision(4) << "beta(num_impostors) " << beta << " (CI high " << hi
    << "), equivocation " << eq << ", directives " << dir;
  return s.str();
}

std::string chat_adapter(Check& c) {
  std::string detail;
  {
    MockChatServer server(load_mock_script("data/fixtures/mock_chat.json"));
    ChatEndpointConfig ep;
    ep.base_url = server.url();
    ep.model_name = "mock";
    ep.retry_backoff_ms = 1;
    ep.timeout_seconds = 5;
    auto client = std::make_shared<const ChatClient>(ep);
    RosterSpec spec;
    spec.kind = RosterSpec::Kind::kChat;
    GameConfig cfg;
    cfg.seed = 4242;
    int unparsed = 0, abstained = 0;
    bool ended = false;
    try {
      auto roster = make_roster(spec, cfg, client);
      auto r = run_game(cfg, roster, "mock-3v1");
      for (const auto& e : r.events) {
        if (const auto* resp = std::get_if<event::ResponseReceived>(&e.body)) {
          unparsed += !resp->parsed;
        }
        abstained += std::holds_alternative<event::NoOp>(e.body);
        if (const auto* u = std::get_if<event::UtteranceMade>(&e.body)) {
          abstained += u->utterance.abstention();
        }
        ended = ended || std::holds_alternative<event::GameEnded>(e.body);
      }
      detail = std::string("game ended ") + outcome_name(r.outcome.kind) + " after " +
               std::to_string(server.requests()) + " requests, " + std::to_string(unparsed) +
               " malformed replies";
    } catch (const std::exception& e) {
      c.expect(false, std::string("crash: ") + e.what());
    }
    c.expect(ended, "game terminated");
    c.expect(unparsed > 0, "fixture produced malformed completions");
    c.expect(abstained >= unparsed, "malformed completions logged as abstentions");
  }
  {
    MockChatServer server(load_mock_script("data/fixtures/mock_retry.json"));
    ChatEndpointConfig ep;
    ep.base_url = server.url();
    ep.model_name = "mock";
    ep.max_retries = 2;
    ep.retry_backoff_ms = 1;
    auto r = ChatClient(ep).complete("ping");
    c.expect(r.text == "recovered" && r.attempts == 3 && server.requests() == 3,
             "500, 500, 200 schedule");
  }
  {
    MockChatServer server(load_mock_script("data/fixtures/mock_always_500.json"));
    ChatEndpointConfig ep;
    ep.base_url = server.url();
    ep.model_name = "mock";
    ep.max_retries = 2;
    ep.retry_backoff_ms = 1;
    auto r = ChatClient(ep).complete("ping");
    c.expect(r.text.empty() && r.attempts == 3 && server.requests() == 3,
             "always 500 gives up after 3 attempts");
  }
  return detail + "; retry schedule ok";
}

std::string sha256(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) {
    s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return s.str();
}

std::string prompt_fidelity(Check& c) {
  const std::string kSpeech = "f1cea95659e53a7b7cf0db80a7b235e8165a401db64a230518951693edae14dd";
  const std::string kDeception =
      "6f36a730f43001604799da41fda3f0b77d5ff7377a1dd950021c7e7b41871bfb";
  c.expect(sha256(speech_act_template()) == kSpeech, "embedded speech-act checksum");
  c.expect(sha256(deception_template()) == kDeception, "embedded deception checksum");
  c.expect(sha256(read_text_file("data/prompts/speech_act.txt")) == kSpeech,
           "speech-act file checksum");
  c.expect(sha256(read_text_file("data/prompts/deception.txt")) == kDeception,
           "deception file checksum");
  c.expect(speech_act_template().find("Only output one word.") != std::string_view::npos,
           "speech-act instruction present");
  return "sha256 " + kSpeech.substr(0, 12) + ".. and " + kDeception.substr(0, 12) + "..";
}

}  // namespace
}  // namespace amongus

int main() {
  using Fn = std::function<std::string(amongus::Check&)>;
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"engine oracle equivalence", amongus::engine_oracles},
      {"determinism", amongus::determinism},
      {"desk-scale throughput", amongus::throughput},
      {"statistics oracles", amongus::statistics},
      {"annotation math", amongus::annotation_math},
      {"planted-effect recovery", amongus::planted},
      {"chat adapter", amongus::chat_adapter},
      {"prompt fidelity", amongus::prompt_fidelity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    amongus::Check check;
    std::string detail;
    try {
      detail = criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%s %zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                ok ? detail.c_str() : check.summary().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
