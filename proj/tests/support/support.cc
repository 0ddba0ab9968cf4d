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

#include "support.h"

#include <cmath>
#include <map>

#include "amongus/engine/runner.h"
#include "amongus/harness/plan.h"

namespace amongus::testing {
namespace {

// Simpson's rule with n (even) panels.
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

std::optional<PlayerId> tally_oracle(const VoteMap& votes) {
  std::map<PlayerId, int> count;
  int skip = 0;
  for (const auto& [voter, target] : votes) {
    if (target) {
      ++count[*target];
    } else {
      ++skip;
    }
  }
  std::optional<PlayerId> best;
  int best_n = 0;
  bool tied = false;
  for (const auto& [p, n] : count) {
    if (n > best_n) {
      best = p;
      best_n = n;
      tied = false;
    } else if (n == best_n) {
      tied = true;
    }
  }
  if (!best || tied || best_n <= skip) return std::nullopt;
  return best;
}

std::optional<Outcome> termination_oracle(int impostors, int crew, bool tasks_done,
                                          int round, int max_rounds) {
  if (impostors == 0) return Outcome::crew(WinReason::kAllImpostorsEjected);
  if (impostors >= crew) return Outcome::impostor();
  if (tasks_done) return Outcome::crew(WinReason::kAllTasksDone);
  if (round >= max_rounds) return Outcome::timeout();
  return std::nullopt;
}

double chi2_sf_oracle(double x, double df) {
  if (x <= 0) return 1.0;
  const double k = df / 2.0;
  const double log_norm = -k * std::log(2.0) - std::lgamma(k);
  // Substituting t = x + u^2 removes the tail's slow decay; for df = 1 the
  // density's pole at 0 is avoided because x > 0.
  auto f = [&](double u) {
    const double t = x + u * u;
    return 2.0 * u * std::exp(log_norm + (k - 1) * std::log(t) - t / 2.0);
  };
  const double upper = std::sqrt(std::max(200.0, 40.0 * df));
  return simpson(f, 0.0, upper, 200000);
}

double normal_sf_oracle(double z) {
  if (z < 0) return 1.0 - normal_sf_oracle(-z);
  auto f = [](double t) { return std::exp(-t * t / 2.0) / std::sqrt(2.0 * M_PI); };
  return simpson(f, z, z + 40.0, 200000);
}

double t_two_sided_oracle(double t, double df) {
  t = std::fabs(t);
  const double c = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) /
                   std::sqrt(df * M_PI);
  // Integrate the tail over theta = atan(s) so the infinite range is finite.
  auto f = [&](double th) {
    const double s = std::tan(th);
    const double sec2 = 1.0 + s * s;
    return c * std::pow(1.0 + s * s / df, -(df + 1) / 2) * sec2;
  };
  return 2.0 * simpson(f, std::atan(t), M_PI / 2 - 1e-12, 400000);
}

GameRecord play_scripted(const GameConfig& config, ScriptedSpec crew,
                         ScriptedSpec impostor, const std::string& id) {
  RosterSpec spec;
  spec.crew = crew;
  spec.impostor = impostor;
  auto roster = make_roster(spec, config);
  return run_game(config, roster, id);
}

GameRecord fixture_record() {
  GameRecord r;
  r.game_id = "fixture";
  r.config.num_crew = 3;
  r.config.num_impostors = 1;
  r.outcome = Outcome::timeout();
  const std::vector<std::string> lines = {
      "Let's stick together.",   "I saw Blue in Storage.", "I'll go to Admin.",
      "Sorry, I missed that.",   "Vote Green.",            "I was in O2.",
      "I promise to watch.",     "Skip this one.",         "I'm worried.",
      "Check Electrical first."};
  for (int i = 0; i < 10; ++i) {
    const int round = i / 4 + 1;
    const int player = i % 4;
    Event e;
    e.timestep = 1;
    e.round = 1;
    e.body = event::UtteranceMade{make_utterance(
        "fixture", 1, round, player, player == 0 ? Role::kImpostor : Role::kCrewmate,
        lines[i])};
    r.events.push_back(std::move(e));
  }
  return r;
}

PlantedCorpus planted_corpus(int games, std::uint64_t seed) {
  PlantedCorpus out;
  std::mt19937_64 rng(seed);
  const std::string act_col = annotation_column(AnnotationTask::kSpeechAct, 1);
  const std::string dec_col = annotation_column(AnnotationTask::kDeception, 1);
  const std::vector<std::pair<int, int>> sizes = {{3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1},
                                                  {3, 2}, {4, 2}, {5, 2}, {6, 2},
                                                  {4, 3}, {5, 3}};
  long utterance_index = 0;
  for (int g = 0; g < games; ++g) {
    const auto [crew, imps] = sizes[static_cast<std::size_t>(g) % sizes.size()];
    GameRecord r;
    r.game_id = "planted-" + std::to_string(g);
    r.config.num_crew = crew;
    r.config.num_impostors = imps;
    r.seed = static_cast<std::uint64_t>(g);
    const int meetings = 1 + static_cast<int>(rng() % 4);
    int ejections = 0;
    int round = 0;
    for (int m = 1; m <= meetings; ++m) {
      round += 1 + static_cast<int>(rng() % 3);
      Event called;
      called.round = round;
      called.timestep = round;
      called.body = event::MeetingCalled{m, MeetingCause::kEmergency, 0, std::nullopt,
                                         "Cafeteria"};
      r.events.push_back(called);
      for (int k = 1; k <= 2; ++k) {
        for (int p = 0; p < crew + imps; ++p) {
          const Role role = p < imps ? Role::kImpostor : Role::kCrewmate;
          const int words = 3 + static_cast<int>(rng() % 12);
          std::string text;
          for (int w = 0; w < words; ++w) text += (w ? " w" : "w");
          auto u = make_utterance(r.game_id, m, k, p, role, text);
          AnnotationRow row;
          row.key = u.key();
          row.game_id = r.game_id;
          row.speaker = p;
          row.role = role;
          row.labels[act_col] =
              utterance_index % 25 == 24 ? "Representatives" : "Directives";
          row.labels[dec_col] = utterance_index % 10 == 9
                                    ? (utterance_index % 20 == 9 ? "Falsification" : "Concealment")
                                    : "Equivocation";
          out.annotations[row.key] = row;
          ++utterance_index;
          Event e;
          e.round = round;
          e.timestep = round;
          e.body = event::UtteranceMade{u};
          r.events.push_back(std::move(e));
        }
      }
      const bool eject = unit(rng) < 0.5;
      Event resolved;
      resolved.round = round;
      resolved.timestep = round;
      resolved.body = event::MeetingResolved{
          m, eject ? std::optional<PlayerId>(imps) : std::nullopt,
          eject ? std::optional<Role>(Role::kCrewmate) : std::nullopt};
      ejections += eject;
      r.events.push_back(resolved);
    }
    // Planted model: log-odds of a crew win fall by 1.5 per extra impostor.
    const double eta = 2.0 + 0.15 * crew - 1.5 * imps + 0.1 * ejections;
    const bool crew_win = unit(rng) < 1.0 / (1.0 + std::exp(-eta));
    r.outcome = crew_win ? Outcome::crew(WinReason::kAllTasksDone) : Outcome::impostor();
    r.final_state.round = round + 1;
    Event end;
    end.round = round + 1;
    end.timestep = round + 1;
    end.body = event::GameEnded{r.outcome};
    r.events.push_back(end);
    out.games.push_back(std::move(r));
  }
  return out;
}

}  // namespace amongus::testing
