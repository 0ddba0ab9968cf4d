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

#include "amongus/harness/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "amongus/stats/ecdf.h"
#include "amongus/stats/logistic.h"
#include "amongus/stats/tests.h"
#include "svg.h"

namespace amongus {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kActs = {"Directives", "Representatives",
                                        "Commissives", "Expressives",
                                        "Declarations"};
const std::vector<std::string> kDeceptions = {"Falsification", "Concealment",
                                              "Equivocation", "Missing"};
const std::vector<std::string> kRoles = {"Crewmate", "Impostor"};

Json insufficient(const std::string& reason) {
  return Json{{"status", "insufficient data"}, {"reason", reason}};
}

std::string fmt(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
      if (quote) {
        text_ += '"';
        for (char c : cells[i]) text_ += c == '"' ? std::string("\"\"") : std::string(1, c);
        text_ += '"';
      } else {
        text_ += cells[i];
      }
    }
    text_ += '\n';
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

bool complete(const Outcome& o) { return o.kind != OutcomeKind::kTimeout; }
bool crew_won(const Outcome& o) { return o.kind == OutcomeKind::kCrewWin; }

// One non-abstention utterance with its labels ("" when unannotated).
struct Utt {
  std::size_t game = 0;
  int meeting = 0;
  bool ejection_meeting = false;
  Role role = Role::kCrewmate;
  std::string act;
  std::string deception;
};

bool is_act(const std::string& label) {
  return std::find(kActs.begin(), kActs.end(), label) != kActs.end();
}

Json steps_json(const stats::Ecdf& e) {
  Json out = Json::array();
  for (const auto& [x, f] : e.steps()) out.push_back(Json::array({x, f}));
  return out;
}

// Proportion with a Wald interval clipped to [0, 1].
Json proportion(double k, double n) {
  if (n <= 0) return insufficient("no observations");
  const double p = k / n;
  const double half = stats::kWaldZ * std::sqrt(p * (1 - p) / n);
  return Json{{"count", k},
              {"n", n},
              {"proportion", p},
              {"ci_low", std::max(0.0, p - half)},
              {"ci_high", std::min(1.0, p + half)}};
}

// Chi-squared over the listed columns after dropping empty ones.
Json chi_squared_section(const std::vector<std::string>& row_names,
                         const std::vector<std::vector<double>>& table,
                         const std::vector<std::string>& col_names) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < col_names.size(); ++j) {
    double s = 0;
    for (const auto& r : table) s += r[j];
    if (s > 0) keep.push_back(j);
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    double s = 0;
    for (double v : table[i]) s += v;
    if (s == 0) return insufficient("no observations for " + row_names[i]);
  }
  if (keep.size() < 2) return insufficient("fewer than two non-empty categories");
  std::vector<std::vector<double>> t;
  for (const auto& r : table) {
    std::vector<double> row;
    for (auto j : keep) row.push_back(r[j]);
    t.push_back(row);
  }
  Json cols = Json::array();
  for (auto j : keep) cols.push_back(col_names[j]);
  auto res = stats::chi_squared(t);
  return Json{{"statistic", res.statistic}, {"df", res.df}, {"p", res.p},
              {"rows", row_names}, {"columns", cols}, {"table", t}};
}

struct FitInput {
  std::vector<std::string> names;
  std::vector<std::vector<double>> x;  // rows
  std::vector<double> y;
};

// Drops constant predictors, then any the design reports as collinear, and
// fits. `odds` adds exp(beta) columns.
Json fit_section(FitInput in, std::vector<std::string> warnings, bool odds,
                 std::vector<std::string> dropped = {}) {
  if (in.y.empty()) return insufficient("no games");
  const double y0 = in.y.front();
  if (std::all_of(in.y.begin(), in.y.end(), [&](double v) { return v == y0; })) {
    return insufficient("outcome is constant");
  }
  auto drop = [&](std::string name) {
    auto it = std::find(in.names.begin(), in.names.end(), name);
    const auto j = static_cast<std::size_t>(it - in.names.begin());
    in.names.erase(it);
    for (auto& r : in.x) r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
    dropped.push_back(name);
  };
  for (std::size_t j = in.names.size(); j-- > 0;) {
    const double v0 = in.x.front()[j];
    if (std::all_of(in.x.begin(), in.x.end(), [&](const auto& r) { return r[j] == v0; })) {
      warnings.push_back(in.names[j] + " is constant and was dropped");
      drop(in.names[j]);
    }
  }
  std::optional<stats::RegressionFit> fit;
  for (int attempt = 0; attempt < 8 && !fit; ++attempt) {
    if (in.x.size() < in.names.size() + 2) {
      return insufficient("fewer games than predictors + 2");
    }
    try {
      fit = stats::logistic_fit(in.x, in.y, in.names);
    } catch (const stats::CollinearityError& e) {
      for (const auto& c : e.columns()) {
        warnings.push_back(c + " is collinear with earlier predictors and was dropped");
        drop(c);
      }
    }
  }
  if (!fit) return insufficient("design stayed rank deficient");
  for (const auto& w : fit->warnings) warnings.push_back(w);
  Json coefs = Json::array();
  for (std::size_t j = 0; j < fit->names.size(); ++j) {
    Json c = {{"name", fit->names[j]},
              {"beta", fit->beta[j]},
              {"se", fit->se[j]},
              {"ci_low", fit->ci_low[j]},
              {"ci_high", fit->ci_high[j]},
              {"z", fit->z[j]},
              {"p", fit->p[j]}};
    if (odds) {
      c["odds_ratio"] = number(std::exp(fit->beta[j]));
      c["or_ci_low"] = number(std::exp(fit->ci_low[j]));
      c["or_ci_high"] = number(std::exp(fit->ci_high[j]));
    }
    coefs.push_back(c);
  }
  return Json{{"n", in.y.size()},
              {"converged", fit->converged},
              {"separation", fit->separation},
              {"iterations", fit->iterations},
              {"log_likelihood", fit->log_likelihood},
              {"dropped", dropped},
              {"warnings", warnings},
              {"coefficients", coefs}};
}

void coef_csv(Csv& csv, const std::string& model, const Json& section) {
  if (!section.contains("coefficients")) return;
  for (const auto& c : section["coefficients"]) {
    csv.row({model, c["name"].get<std::string>(), fmt(c["beta"]), fmt(c["se"]),
             fmt(c["ci_low"]), fmt(c["ci_high"]), fmt(c["p"]),
             c.contains("odds_ratio") && !c["odds_ratio"].is_null()
                 ? fmt(c["odds_ratio"].get<double>())
                 : ""});
  }
}

std::vector<svg::Interval> coef_intervals(const Json& section, bool odds,
                                          bool skip_intercept) {
  std::vector<svg::Interval> out;
  if (!section.contains("coefficients")) return out;
  for (const auto& c : section["coefficients"]) {
    const std::string name = c["name"];
    if (skip_intercept && name == "intercept") continue;
    if (odds) {
      if (c["odds_ratio"].is_null() || c["or_ci_low"].is_null() || c["or_ci_high"].is_null()) continue;
      out.push_back({name, c["odds_ratio"], c["or_ci_low"], c["or_ci_high"]});
    } else {
      out.push_back({name, c["beta"], c["ci_low"], c["ci_high"]});
    }
  }
  return out;
}

Json correlation_cell(const std::vector<double>& x, const std::vector<double>& y,
                      bool rank) {
  try {
    auto r = rank ? stats::spearman(x, y) : stats::pearson(x, y);
    return Json{{"rho", r.rho}, {"p", r.p}, {"n", r.n}, {"stars", stars(r.p)}};
  } catch (const std::invalid_argument& e) {
    return insufficient(e.what());
  }
}

std::string config_order_key(const GameFeatures& f) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%03d:%03d", f.num_crew + f.num_impostors,
                f.num_impostors);
  return buf;
}

}  // namespace

GameFeatures game_features(const GameRecord& record) {
  GameFeatures f;
  f.game_id = record.game_id;
  f.num_crew = record.config.num_crew;
  f.num_impostors = record.config.num_impostors;
  f.config = std::to_string(f.num_crew) + "v" + std::to_string(f.num_impostors);
  f.outcome = record.outcome;
  f.rounds = record.final_state.round;
  for (const auto& e : record.events) {
    if (std::holds_alternative<event::MeetingCalled>(e.body)) {
      ++f.discussions;
      f.discussion_rounds.push_back(e.round);
    } else if (const auto* m = std::get_if<event::MeetingResolved>(&e.body)) {
      if (m->ejected) {
        ++f.ejections;
        f.ejection_rounds.push_back(e.round);
      }
    } else if (const auto* u = std::get_if<event::UtteranceMade>(&e.body)) {
      if (u->utterance.abstention()) {
        ++f.abstentions;
      } else {
        ++f.utterances;
        f.words += u->utterance.word_count;
      }
    }
  }
  if (f.discussions > 0) f.words_per_discussion = double(f.words) / f.discussions;
  if (f.utterances > 0) f.words_per_utterance = double(f.words) / f.utterances;
  return f;
}

AnalysisReport analyze(const std::vector<GameRecord>& corpus,
                       const AnnotationTable& annotations,
                       const std::optional<Json>& stability,
                       const AnalyzeOptions& options) {
  AnalysisReport out;
  Json& report = out.report;
  const std::string act_col = annotation_column(AnnotationTask::kSpeechAct, options.speech_run);
  const std::string dec_col =
      annotation_column(AnnotationTask::kDeception, options.deception_run);
  report["columns"] = Json{{"speech_act", act_col}, {"deception", dec_col}};

  std::vector<GameFeatures> games;
  std::vector<Utt> utts;
  std::size_t opportunities = 0, abstentions = 0;
  for (std::size_t g = 0; g < corpus.size(); ++g) {
    const auto& rec = corpus[g];
    games.push_back(game_features(rec));
    std::set<int> ejection_meetings;
    for (const auto& e : rec.events) {
      if (const auto* m = std::get_if<event::MeetingResolved>(&e.body)) {
        if (m->ejected) ejection_meetings.insert(m->meeting_index);
      }
    }
    for (const auto& u : rec.utterances()) {
      ++opportunities;
      if (u.abstention()) {
        ++abstentions;
        continue;
      }
      Utt x;
      x.game = g;
      x.meeting = u.meeting_index;
      x.ejection_meeting = ejection_meetings.count(u.meeting_index) > 0;
      x.role = u.speaker_role;
      if (auto it = annotations.find(u.key()); it != annotations.end()) {
        if (auto a = it->second.labels.find(act_col); a != it->second.labels.end()) {
          x.act = a->second;
        }
        if (auto d = it->second.labels.find(dec_col); d != it->second.labels.end()) {
          x.deception = d->second;
        }
      }
      utts.push_back(std::move(x));
    }
  }

  // Configs in (players, impostors) order.
  std::vector<std::string> configs;
  {
    std::map<std::string, std::string> order;
    for (const auto& f : games) order[config_order_key(f) + f.config] = f.config;
    for (const auto& [k, c] : order) configs.push_back(c);
  }

  // Game counts.
  {
    int crew = 0, imp = 0, timeout = 0;
    Json by_config = Json::array();
    Csv csv({"config", "games", "crew_wins", "impostor_wins", "timeouts",
             "crew_win_rate", "impostor_win_rate"});
    for (const auto& c : configs) {
      int n = 0, cw = 0, iw = 0, to = 0;
      for (const auto& f : games) {
        if (f.config != c) continue;
        ++n;
        cw += f.outcome.kind == OutcomeKind::kCrewWin;
        iw += f.outcome.kind == OutcomeKind::kImpostorWin;
        to += f.outcome.kind == OutcomeKind::kTimeout;
      }
      crew += cw;
      imp += iw;
      timeout += to;
      const double decided = cw + iw;
      Json row = {{"config", c}, {"games", n}, {"crew_wins", cw},
                  {"impostor_wins", iw}, {"timeouts", to},
                  {"crew_win_rate", decided > 0 ? Json(cw / decided) : Json(nullptr)},
                  {"impostor_win_rate", decided > 0 ? Json(iw / decided) : Json(nullptr)}};
      by_config.push_back(row);
      csv.row({c, std::to_string(n), std::to_string(cw), std::to_string(iw),
               std::to_string(to), decided > 0 ? fmt(cw / decided) : "",
               decided > 0 ? fmt(iw / decided) : ""});
    }
    const int total = static_cast<int>(games.size());
    report["games"] = Json{{"total", total},
                           {"crew_wins", crew},
                           {"impostor_wins", imp},
                           {"timeouts", timeout},
                           {"reconciled", crew + imp + timeout == total},
                           {"by_config", by_config}};
    out.files["games.csv"] = csv.str();
  }

  // Wins by role: ECDF of the round at which each decided game ended.
  {
    Json sec = Json::array();
    Csv csv({"config", "winner", "round", "ecdf"});
    std::vector<svg::StepSeries> series;
    std::vector<std::string> groups = configs;
    groups.push_back("all");
    for (const auto& c : groups) {
      for (const auto& [winner, kind] :
           {std::pair{"Crewmate", OutcomeKind::kCrewWin},
            std::pair{"Impostor", OutcomeKind::kImpostorWin}}) {
        std::vector<double> rounds;
        for (const auto& f : games) {
          if ((c == "all" || f.config == c) && f.outcome.kind == kind) {
            rounds.push_back(f.rounds);
          }
        }
        Json entry = {{"config", c}, {"winner", winner}, {"games", rounds.size()}};
        if (rounds.empty()) {
          entry["ecdf"] = insufficient("no games won by this role");
        } else {
          stats::Ecdf e(rounds);
          entry["ecdf"] = steps_json(e);
          for (const auto& [x, fx] : e.steps()) csv.row({c, winner, fmt(x), fmt(fx)});
          if (c == "all") series.push_back({std::string(winner) + " wins", e.steps()});
        }
        sec.push_back(entry);
      }
    }
    report["wins_by_role"] = sec;
    out.files["wins_by_role.csv"] = csv.str();
    out.files["wins_by_role.svg"] =
        svg::step_plot("Game length by winning role", "round", series);
  }

  // Tempo: when discussions and ejections happen.
  {
    Json sec = Json::array();
    Csv csv({"config", "series", "x", "ecdf"});
    std::vector<svg::StepSeries> series;
    for (const auto& c : configs) {
      std::vector<double> d_rounds, e_rounds, d_counts, e_counts;
      for (const auto& f : games) {
        if (f.config != c) continue;
        for (int r : f.discussion_rounds) d_rounds.push_back(r);
        for (int r : f.ejection_rounds) e_rounds.push_back(r);
        d_counts.push_back(f.discussions);
        e_counts.push_back(f.ejections);
      }
      Json entry = {{"config", c}};
      auto add = [&](const char* name, const std::vector<double>& v, bool plot) {
        if (v.empty()) {
          entry[name] = insufficient("no events");
          return;
        }
        stats::Ecdf e(v);
        entry[name] = steps_json(e);
        for (const auto& [x, fx] : e.steps()) csv.row({c, name, fmt(x), fmt(fx)});
        if (plot) series.push_back({c + " " + name, e.steps()});
      };
      add("discussion_rounds", d_rounds, true);
      add("ejection_rounds", e_rounds, true);
      add("discussions_per_game", d_counts, false);
      add("ejections_per_game", e_counts, false);
      sec.push_back(entry);
    }
    report["tempo"] = sec;
    out.files["tempo.csv"] = csv.str();
    out.files["tempo.svg"] =
        svg::step_plot("Discussions and ejections over rounds", "round", series);
  }

  // Crew victory regression on structural and verbosity predictors.
  {
    FitInput in;
    in.names = {"num_crew", "num_impostors", "num_discussions", "num_ejects",
                "words_per_discussion", "words_per_utterance"};
    bool any_meeting = false;
    for (const auto& f : games) {
      if (!complete(f.outcome)) continue;
      in.x.push_back({double(f.num_crew), double(f.num_impostors), double(f.discussions),
                      double(f.ejections), f.words_per_discussion, f.words_per_utterance});
      in.y.push_back(crew_won(f.outcome) ? 1.0 : 0.0);
      any_meeting = any_meeting || f.discussions > 0;
    }
    std::vector<std::string> warnings, dropped;
    if (!any_meeting && !in.x.empty()) {
      warnings.push_back("no meetings in corpus: discussion predictors dropped");
      for (auto& r : in.x) r.resize(2);
      in.names.resize(2);
      dropped = {"num_discussions", "num_ejects", "words_per_discussion",
                 "words_per_utterance"};
    }
    Json sec = fit_section(in, warnings, true, dropped);
    report["crew_win_regression"] = sec;
    Csv csv({"model", "predictor", "beta", "se", "ci_low", "ci_high", "p", "odds_ratio"});
    coef_csv(csv, "crew_win", sec);
    out.files["crew_win_regression.csv"] = csv.str();
    out.files["crew_win_regression.svg"] = svg::interval_plot(
        "Crew win log-odds", "beta (effect on crew win)", coef_intervals(sec, false, true),
        0.0, false);
  }

  // Speech acts by role.
  {
    std::map<std::string, std::map<std::string, double>> counts;  // role -> act
    std::map<std::string, double> classified, unclassifiable;
    for (const auto& u : utts) {
      const std::string role = role_name(u.role);
      if (is_act(u.act)) {
        counts[role][u.act] += 1;
        classified[role] += 1;
      } else if (!u.act.empty()) {
        unclassifiable[role] += 1;
      }
    }
    Json by_role = Json::object();
    Csv csv({"role", "act", "count", "n", "proportion", "ci_low", "ci_high"});
    double all_n = 0;
    std::map<std::string, double> all;
    for (const auto& role : kRoles) {
      Json r = {{"classified", classified[role]}, {"unclassifiable", unclassifiable[role]}};
      Json props = Json::object();
      for (const auto& act : kActs) {
        props[act] = proportion(counts[role][act], classified[role]);
        all[act] += counts[role][act];
        if (classified[role] > 0) {
          const auto& p = props[act];
          csv.row({role, act, fmt(counts[role][act]), fmt(classified[role]),
                   fmt(p["proportion"]), fmt(p["ci_low"]), fmt(p["ci_high"])});
        }
      }
      all_n += classified[role];
      r["acts"] = props;
      by_role[role] = r;
    }
    Json overall = Json::object();
    for (const auto& act : kActs) {
      overall[act] = proportion(all[act], all_n);
      if (all_n > 0) {
        csv.row({"all", act, fmt(all[act]), fmt(all_n), fmt(overall[act]["proportion"]),
                 fmt(overall[act]["ci_low"]), fmt(overall[act]["ci_high"])});
      }
    }
    Json sec = {{"overall", overall}, {"by_role", by_role}};
    std::vector<std::vector<double>> table;
    for (const auto& role : kRoles) {
      std::vector<double> row;
      for (const auto& act : kActs) row.push_back(counts[role][act]);
      table.push_back(row);
    }
    sec["chi_squared"] = chi_squared_section(kRoles, table, kActs);

    Json contrasts = Json::array();
    Csv or_csv({"act", "z", "p", "odds_ratio", "ci_low", "ci_high", "corrected"});
    std::vector<svg::Interval> intervals;
    const double ni = classified["Impostor"], nc = classified["Crewmate"];
    for (const auto& act : kActs) {
      const double ki = counts["Impostor"][act], kc = counts["Crewmate"][act];
      Json c = {{"act", act}};
      if (ni == 0 || nc == 0) {
        c["status"] = "insufficient data";
        c["reason"] = "a role has no classified utterances";
      } else if (ki + kc == 0) {
        c["status"] = "insufficient data";
        c["reason"] = "act never used";
      } else {
        try {
          auto z = stats::two_prop_z(ki, ni, kc, nc);
          c["z"] = z.z;
          c["p"] = z.p;
        } catch (const std::invalid_argument& e) {
          c["z"] = nullptr;
          c["p"] = nullptr;
          c["z_note"] = e.what();
        }
        try {
          auto o = stats::odds_ratio(ki, ni - ki, kc, nc - kc);
          c["odds_ratio"] = o.odds_ratio;
          c["ci_low"] = o.ci_low;
          c["ci_high"] = o.ci_high;
          c["corrected"] = o.corrected;
          intervals.push_back({act, o.odds_ratio, o.ci_low, o.ci_high});
        } catch (const std::invalid_argument& e) {
          c["odds_ratio"] = nullptr;
          c["or_note"] = e.what();
        }
        or_csv.row({act, c["z"].is_null() ? "" : fmt(c["z"]),
                    c["p"].is_null() ? "" : fmt(c["p"]),
                    c["odds_ratio"].is_null() ? "" : fmt(c["odds_ratio"]),
                    c.contains("ci_low") ? fmt(c["ci_low"]) : "",
                    c.contains("ci_high") ? fmt(c["ci_high"]) : "",
                    c.contains("corrected") ? (c["corrected"].get<bool>() ? "true" : "false")
                                            : ""});
      }
      contrasts.push_back(c);
    }
    sec["impostor_vs_crew"] = contrasts;
    report["speech_acts_by_role"] = sec;
    out.files["speech_acts_by_role.csv"] = csv.str();
    out.files["speech_act_odds_ratios.csv"] = or_csv.str();
    out.files["speech_act_odds_ratios.svg"] = svg::interval_plot(
        "Speech acts: impostor vs crew", "odds ratio", intervals, 1.0, true);
  }

  // Speech acts and game outcome.
  {
    std::map<std::size_t, std::map<std::string, double>> per_game;
    std::map<std::size_t, double> per_game_n;
    std::vector<std::vector<double>> table(2, std::vector<double>(kActs.size(), 0));
    for (const auto& u : utts) {
      if (!is_act(u.act) || !complete(games[u.game].outcome)) continue;
      per_game[u.game][u.act] += 1;
      per_game_n[u.game] += 1;
      const auto j = static_cast<std::size_t>(
          std::find(kActs.begin(), kActs.end(), u.act) - kActs.begin());
      table[crew_won(games[u.game].outcome) ? 0 : 1][j] += 1;
    }
    Json sec;
    sec["chi_squared"] =
        chi_squared_section({"crew_win_games", "impostor_win_games"}, table, kActs);
    FitInput in;
    in.names = {"pct_directives", "pct_representatives", "pct_commissives",
                "pct_declarations"};
    for (const auto& [g, n] : per_game_n) {
      auto& c = per_game[g];
      in.x.push_back({100 * c["Directives"] / n, 100 * c["Representatives"] / n,
                      100 * c["Commissives"] / n, 100 * c["Declarations"] / n});
      in.y.push_back(crew_won(games[g].outcome) ? 1.0 : 0.0);
    }
    sec["baseline"] = "Expressives";
    sec["logistic"] = fit_section(in, {}, true);
    report["speech_acts_and_outcome"] = sec;
    Csv csv({"model", "predictor", "beta", "se", "ci_low", "ci_high", "p", "odds_ratio"});
    coef_csv(csv, "crew_win_by_speech_act_share", sec["logistic"]);
    out.files["speech_acts_and_outcome.csv"] = csv.str();
    out.files["speech_acts_and_outcome.svg"] =
        svg::interval_plot("Crew win odds by speech-act share", "odds ratio per percentage point",
                           coef_intervals(sec["logistic"], true, true), 1.0, true);
  }

  // Speech acts in meetings that ended with an ejection.
  {
    std::vector<std::vector<double>> table(2, std::vector<double>(kActs.size(), 0));
    for (const auto& u : utts) {
      if (!u.ejection_meeting || !is_act(u.act)) continue;
      const auto j = static_cast<std::size_t>(
          std::find(kActs.begin(), kActs.end(), u.act) - kActs.begin());
      table[u.role == Role::kImpostor ? 1 : 0][j] += 1;
    }
    Json sec;
    Csv csv({"role", "act", "count", "n", "proportion"});
    Json by_role = Json::object();
    for (std::size_t r = 0; r < 2; ++r) {
      double n = 0;
      for (double v : table[r]) n += v;
      Json acts = Json::object();
      for (std::size_t j = 0; j < kActs.size(); ++j) {
        acts[kActs[j]] = proportion(table[r][j], n);
        if (n > 0) csv.row({kRoles[r], kActs[j], fmt(table[r][j]), fmt(n), fmt(table[r][j] / n)});
      }
      by_role[kRoles[r]] = acts;
    }
    sec["by_role"] = by_role;
    sec["chi_squared"] = chi_squared_section(kRoles, table, kActs);
    report["pre_ejection"] = sec;
    out.files["pre_ejection.csv"] = csv.str();
  }

  // Meeting-to-meeting shifts in speech-act shares, within and across roles.
  {
    // game -> meeting -> role -> (act counts, n)
    std::map<std::size_t, std::map<int, std::map<int, std::map<std::string, double>>>> shares;
    for (const auto& u : utts) {
      if (!is_act(u.act)) continue;
      auto& cell = shares[u.game][u.meeting][static_cast<int>(u.role)];
      cell[u.act] += 1;
      cell["_n"] += 1;
    }
    Json deltas = Json::object();
    Json lagged = Json::array();
    Csv csv({"kind", "role_or_pair", "act", "value", "p", "n"});
    for (int role = 0; role < 2; ++role) {
      Json per_act = Json::object();
      for (const auto& act : kActs) {
        double sum = 0;
        int pairs = 0;
        for (const auto& [g, meetings] : shares) {
          for (auto it = meetings.begin(); it != meetings.end(); ++it) {
            auto nx = std::next(it);
            if (nx == meetings.end()) break;
            auto a = it->second.find(role), b = nx->second.find(role);
            if (a == it->second.end() || b == nx->second.end()) continue;
            sum += b->second.at("_n") > 0 ? (b->second.count(act) ? b->second.at(act) : 0) / b->second.at("_n") -
                                                (a->second.count(act) ? a->second.at(act) : 0) / a->second.at("_n")
                                          : 0;
            ++pairs;
          }
        }
        if (pairs == 0) {
          per_act[act] = insufficient("no consecutive meetings");
        } else {
          per_act[act] = Json{{"delta", sum / pairs}, {"pairs", pairs}};
          csv.row({"delta", kRoles[role], act, fmt(sum / pairs), "", std::to_string(pairs)});
        }
      }
      deltas[kRoles[role]] = per_act;
    }
    for (const auto& [from, to] : {std::pair{1, 0}, std::pair{0, 1}}) {
      for (const auto& act : kActs) {
        std::vector<double> x, y;
        for (const auto& [g, meetings] : shares) {
          for (auto it = meetings.begin(); it != meetings.end(); ++it) {
            auto nx = std::next(it);
            if (nx == meetings.end()) break;
            auto a = it->second.find(from), b = nx->second.find(to);
            if (a == it->second.end() || b == nx->second.end()) continue;
            x.push_back((a->second.count(act) ? a->second.at(act) : 0) / a->second.at("_n"));
            y.push_back((b->second.count(act) ? b->second.at(act) : 0) / b->second.at("_n"));
          }
        }
        const std::string pair = kRoles[from] + "->" + kRoles[to];
        Json cell = correlation_cell(x, y, false);
        lagged.push_back(Json{{"pair", pair}, {"act", act}, {"pearson", cell}});
        if (cell.contains("rho")) {
          csv.row({"lagged_pearson", pair, act, fmt(cell["rho"]), fmt(cell["p"]),
                   std::to_string(x.size())});
        }
      }
    }
    report["cross_role"] = Json{{"approximate", true},
                                {"pairing", "consecutive meetings within a game"},
                                {"mean_delta", deltas},
                                {"lagged_correlation", lagged}};
    out.files["cross_role.csv"] = csv.str();
  }

  // Deception types overall, by outcome and by role.
  {
    std::map<std::string, std::map<std::string, double>> by;  // group -> label
    for (const auto& u : utts) {
      if (u.deception.empty()) continue;
      by["all"][u.deception] += 1;
      by[role_name(u.role)][u.deception] += 1;
      const auto& o = games[u.game].outcome;
      if (complete(o)) by[crew_won(o) ? "crew_win_games" : "impostor_win_games"][u.deception] += 1;
    }
    Json sec = Json::object();
    Csv csv({"group", "type", "count", "n", "proportion", "logit"});
    std::vector<svg::Interval> points;
    for (const std::string group :
         {"all", "crew_win_games", "impostor_win_games", "Crewmate", "Impostor"}) {
      double n = 0;
      for (const auto& l : kDeceptions) n += by[group][l];
      Json g = Json::object();
      if (n == 0) {
        sec[group] = insufficient("no labelled utterances");
        continue;
      }
      for (const auto& l : kDeceptions) {
        const double k = by[group][l];
        const double lp = stats::logit_prop(k, n);
        g[l] = Json{{"count", k}, {"n", n}, {"proportion", k / n}, {"logit", lp}};
        csv.row({group, l, fmt(k), fmt(n), fmt(k / n), fmt(lp)});
        if (group != "all") points.push_back({group + " " + l, lp, lp, lp});
      }
      sec[group] = g;
    }
    std::vector<std::vector<double>> table;
    for (const std::string group : {"crew_win_games", "impostor_win_games"}) {
      std::vector<double> row;
      for (const auto& l : kDeceptions) row.push_back(by[group][l]);
      table.push_back(row);
    }
    sec["outcome_chi_squared"] =
        chi_squared_section({"crew_win_games", "impostor_win_games"}, table, kDeceptions);
    report["deception"] = sec;
    out.files["deception.csv"] = csv.str();
    out.files["deception.svg"] =
        svg::interval_plot("Deception types (logit proportion)", "logit", points, 0.0, false);
  }

  // Per-game rates for the coupling and ejection tables.
  struct GameRates {
    std::map<std::string, double> act_share;
    std::map<std::string, double> deception_rate;
    std::map<std::string, double> deception_count;
  };
  std::map<std::size_t, GameRates> rates;
  {
    std::map<std::size_t, std::map<std::string, double>> acts, decs;
    std::map<std::size_t, double> act_n, dec_n;
    for (const auto& u : utts) {
      if (!complete(games[u.game].outcome)) continue;
      if (is_act(u.act)) {
        acts[u.game][u.act] += 1;
        act_n[u.game] += 1;
      }
      if (!u.deception.empty()) {
        decs[u.game][u.deception] += 1;
        dec_n[u.game] += 1;
      }
    }
    for (const auto& [g, n] : dec_n) {
      auto& r = rates[g];
      for (const auto& l : kDeceptions) {
        r.deception_count[l] = decs[g][l];
        r.deception_rate[l] = decs[g][l] / n;
      }
      for (const auto& a : kActs) {
        r.act_share[a] = act_n[g] > 0 ? acts[g][a] / act_n[g] : std::nan("");
      }
    }
  }

  // Spearman coupling of deception rates and speech-act shares across games.
  {
    Json sec = Json::array();
    Csv csv({"deception", "act", "rho", "p", "stars", "n"});
    for (const std::string d : {"Equivocation", "Falsification", "Concealment"}) {
      for (const std::string a : {"Directives", "Representatives", "Commissives", "Expressives"}) {
        std::vector<double> x, y;
        for (const auto& [g, r] : rates) {
          if (std::isnan(r.act_share.at(a))) continue;
          x.push_back(r.deception_rate.at(d));
          y.push_back(r.act_share.at(a));
        }
        Json cell = correlation_cell(x, y, true);
        sec.push_back(Json{{"deception", d}, {"act", a}, {"spearman", cell}});
        if (cell.contains("rho")) {
          csv.row({d, a, fmt(cell["rho"]), fmt(cell["p"]), cell["stars"],
                   std::to_string(x.size())});
        }
      }
    }
    report["speech_deception_coupling"] = sec;
    out.files["speech_deception_coupling.csv"] = csv.str();
  }

  // Deception against ejections, and deception counts predicting the outcome.
  {
    Json corr = Json::array();
    Csv csv({"deception", "rho_ejections", "p", "stars", "n"});
    for (const std::string d : {"Concealment", "Falsification", "Equivocation"}) {
      std::vector<double> x, y;
      for (const auto& [g, r] : rates) {
        x.push_back(r.deception_count.at(d));
        y.push_back(games[g].ejections);
      }
      Json cell = correlation_cell(x, y, true);
      corr.push_back(Json{{"deception", d}, {"spearman", cell}});
      if (cell.contains("rho")) {
        csv.row({d, fmt(cell["rho"]), fmt(cell["p"]), cell["stars"], std::to_string(x.size())});
      }
    }
    FitInput in;
    in.names = {"Concealment", "Falsification", "Equivocation", "Missing"};
    for (const auto& [g, r] : rates) {
      in.x.push_back({r.deception_count.at("Concealment"), r.deception_count.at("Falsification"),
                      r.deception_count.at("Equivocation"), r.deception_count.at("Missing")});
      in.y.push_back(games[g].outcome.kind == OutcomeKind::kImpostorWin ? 1.0 : 0.0);
    }
    Json fit = fit_section(in, {}, true);
    report["deception_and_outcome"] =
        Json{{"ejection_correlation", corr},
             {"outcome", "impostor_win"},
             {"logistic", fit}};
    Csv fit_csv({"model", "predictor", "beta", "se", "ci_low", "ci_high", "p", "odds_ratio"});
    coef_csv(fit_csv, "impostor_win_by_deception_count", fit);
    out.files["deception_ejections.csv"] = csv.str();
    out.files["deception_outcome_regression.csv"] = fit_csv.str();
  }

  // Bookkeeping that must add up.
  {
    std::size_t classified = 0, unclassifiable = 0, act_missing = 0;
    std::size_t dec_labelled = 0, dec_missing = 0, dec_unannotated = 0;
    for (const auto& u : utts) {
      if (is_act(u.act)) {
        ++classified;
      } else if (u.act.empty()) {
        ++act_missing;
      } else {
        ++unclassifiable;
      }
      if (u.deception.empty()) {
        ++dec_unannotated;
      } else if (u.deception == "Missing") {
        ++dec_missing;
      } else {
        ++dec_labelled;
      }
    }
    report["accounting"] = Json{
        {"utterance_opportunities", opportunities},
        {"abstentions", abstentions},
        {"speech_act",
         Json{{"classified", classified},
              {"unclassifiable", unclassifiable},
              {"unannotated", act_missing},
              {"reconciled",
               classified + unclassifiable + act_missing + abstentions == opportunities}}},
        {"deception",
         Json{{"labelled", dec_labelled},
              {"missing", dec_missing},
              {"unannotated", dec_unannotated},
              {"reconciled",
               dec_labelled + dec_missing + dec_unannotated + abstentions == opportunities}}}};
  }

  report["annotation_stability"] = stability ? *stability : Json(nullptr);
  return out;
}

void write_report(const AnalysisReport& report, const fs::path& out) {
  fs::create_directories(out);
  write_text_file(out / "report.json", report.report.dump(2) + "\n");
  for (const auto& [name, text] : report.files) write_text_file(out / name, text);
}

}  // namespace amongus
