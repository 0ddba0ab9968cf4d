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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "amongus/stats/distributions.h"
#include "amongus/stats/ecdf.h"
#include "amongus/stats/logistic.h"
#include "amongus/stats/tests.h"
#include "support.h"

namespace amongus::stats {
namespace {

using amongus::testing::unit;

// Expands grouped counts into a saturated single-binary-predictor design.
void grouped(std::vector<std::vector<double>>& x, std::vector<double>& y, double xv,
             int wins, int losses) {
  for (int i = 0; i < wins; ++i) {
    x.push_back({xv});
    y.push_back(1);
  }
  for (int i = 0; i < losses; ++i) {
    x.push_back({xv});
    y.push_back(0);
  }
}

Eigen::MatrixXd design(const std::vector<std::vector<double>>& x) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(x.size()),
                    static_cast<Eigen::Index>(x[0].size() + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = 1;
    for (std::size_t j = 0; j < x[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = x[i][j];
    }
  }
  return m;
}

TEST(Ecdf, SpecExamples) {
  Ecdf e({1, 2, 2, 4});
  EXPECT_DOUBLE_EQ(e(2), 0.75);
  EXPECT_DOUBLE_EQ(e(0.5), 0.0);
  EXPECT_DOUBLE_EQ(e(4), 1.0);
  EXPECT_DOUBLE_EQ(e(100), 1.0);
  EXPECT_THROW(Ecdf({}), std::invalid_argument);
}

TEST(Ecdf, MonotoneAndHitsBothEnds) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng() % 40);
    for (auto& x : v) x = std::floor(unit(rng) * 20) - 10;
    Ecdf e(v);
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    EXPECT_EQ(e(lo - 1e-9), 0.0);
    EXPECT_EQ(e(hi), 1.0);
    double prev = 0;
    for (double x = lo - 1; x <= hi + 1; x += 0.25) {
      const double f = e(x);
      EXPECT_GE(f, prev);
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
      prev = f;
    }
  }
}

TEST(Logistic, SaturatedTwoByTwoClosedForm) {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  grouped(x, y, 1, 30, 20);
  grouped(x, y, 0, 10, 40);
  auto fit = logistic_fit(x, y, {"x"});
  ASSERT_TRUE(fit.converged);
  EXPECT_FALSE(fit.separation);
  EXPECT_NEAR(fit.beta[0], std::log(10.0 / 40.0), 1e-6);
  EXPECT_NEAR(fit.beta[1], std::log(30.0 * 40.0 / (20.0 * 10.0)), 1e-6);
  // Wald SE of a log odds ratio is sqrt(1/a + 1/b + 1/c + 1/d).
  EXPECT_NEAR(fit.se[1], std::sqrt(1.0 / 30 + 1.0 / 20 + 1.0 / 10 + 1.0 / 40), 1e-6);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(fit.ci_low[j], fit.beta[j] - 1.96 * fit.se[j], 1e-12);
    EXPECT_NEAR(fit.ci_high[j], fit.beta[j] + 1.96 * fit.se[j], 1e-12);
  }
}

TEST(Logistic, SaturatedFitsForRandomTables) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 40), b = 1 + static_cast<int>(rng() % 40);
    const int c = 1 + static_cast<int>(rng() % 40), d = 1 + static_cast<int>(rng() % 40);
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    grouped(x, y, 1, a, b);
    grouped(x, y, 0, c, d);
    auto fit = logistic_fit(x, y, {"x"});
    EXPECT_NEAR(fit.beta[0], std::log(double(c) / d), 1e-6);
    EXPECT_NEAR(fit.beta[1], std::log(double(a) * d / (double(b) * c)), 1e-6);
  }
}

TEST(Logistic, GradientVanishesAtTheOptimum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    for (int i = 0; i < 300; ++i) {
      const double a = unit(rng) * 4 - 2, b = std::floor(unit(rng) * 5);
      x.push_back({a, b});
      const double eta = 0.3 + 0.8 * a - 0.4 * b;
      y.push_back(unit(rng) < 1 / (1 + std::exp(-eta)) ? 1 : 0);
    }
    auto fit = logistic_fit(x, y, {"a", "b"});
    ASSERT_TRUE(fit.converged);
    const auto m = design(x);
    const Eigen::VectorXd yy = Eigen::Map<const Eigen::VectorXd>(y.data(), y.size());
    const Eigen::VectorXd beta = Eigen::Map<const Eigen::VectorXd>(fit.beta.data(),
                                                                   fit.beta.size());
    EXPECT_NEAR(log_likelihood(m, yy, beta), fit.log_likelihood, 1e-9);
    double norm2 = 0;
    const double h = 1e-5;
    for (Eigen::Index j = 0; j < beta.size(); ++j) {
      Eigen::VectorXd up = beta, down = beta;
      up[j] += h;
      down[j] -= h;
      const double g = (log_likelihood(m, yy, up) - log_likelihood(m, yy, down)) / (2 * h);
      norm2 += g * g;
    }
    EXPECT_LT(std::sqrt(norm2), 1e-6);
  }
}

TEST(Logistic, FigureFourShapeIsAccepted) {
  std::mt19937_64 rng(13);
  const std::vector<std::string> names = {"num_crew", "num_impostors", "num_discussions",
                                          "num_ejects", "words_per_discussion",
                                          "words_per_utterance"};
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (int i = 0; i < 400; ++i) {
    const double crew = 3 + rng() % 5, imp = 1 + rng() % 3, disc = rng() % 5,
                 ej = std::floor(unit(rng) * (disc + 1)), wpd = 20 + unit(rng) * 100,
                 wpu = 5 + unit(rng) * 15;
    x.push_back({crew, imp, disc, ej, wpd, wpu});
    const double eta = 0.5 * crew - 1.5 * imp + 0.6 * ej - 0.01 * wpd;
    y.push_back(unit(rng) < 1 / (1 + std::exp(-eta)) ? 1 : 0);
  }
  auto fit = logistic_fit(x, y, names);
  ASSERT_EQ(fit.names.size(), 7u);
  EXPECT_EQ(fit.names[0], "intercept");
  for (std::size_t j = 0; j < names.size(); ++j) EXPECT_EQ(fit.names[j + 1], names[j]);
  EXPECT_TRUE(fit.converged);
  EXPECT_LT(fit.beta[2], 0);
}

TEST(Logistic, ConstantOutcomeIsAnError) {
  using Rows = std::vector<std::vector<double>>;
  using Ys = std::vector<double>;
  const std::vector<std::string> names = {"x"};
  EXPECT_THROW(logistic_fit(Rows{{1}, {2}, {3}}, Ys{1, 1, 1}, names), std::invalid_argument);
  EXPECT_THROW(logistic_fit(Rows{{1}, {2}, {3}}, Ys{1, 2, 0}, names), std::invalid_argument);
  EXPECT_THROW(logistic_fit(Rows{{1}, {2}}, Ys{1, 0}, names), std::invalid_argument);
}

TEST(Logistic, SeparationIsFlagged) {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (int i = 0; i < 20; ++i) {
    x.push_back({double(i)});
    y.push_back(i >= 10 ? 1 : 0);
  }
  auto fit = logistic_fit(x, y, {"x"});
  EXPECT_TRUE(fit.separation);
  EXPECT_FALSE(fit.converged);
  EXPECT_FALSE(fit.warnings.empty());
  EXPECT_GT(fit.beta[1], 0);
}

TEST(Logistic, CollinearColumnsAreNamed) {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const double a = unit(rng);
    x.push_back({a, 2 * a + 1});
    y.push_back(i % 3 == 0 ? 1 : 0);
  }
  try {
    logistic_fit(x, y, {"a", "b"});
    FAIL() << "expected a collinearity error";
  } catch (const CollinearityError& e) {
    ASSERT_EQ(e.columns().size(), 1u);
    EXPECT_EQ(e.columns()[0], "b");
  }
}

TEST(ChiSquared, SpecExamples) {
  auto r = chi_squared({{10, 20}, {20, 10}});
  EXPECT_NEAR(r.statistic, 20.0 / 3.0, 1e-12);
  EXPECT_EQ(r.df, 1);
  EXPECT_NEAR(r.p, 0.009823274507519247, 1e-10);
  auto same = chi_squared({{3, 6, 9}, {3, 6, 9}});
  EXPECT_NEAR(same.statistic, 0.0, 1e-12);
  EXPECT_NEAR(same.p, 1.0, 1e-12);
  EXPECT_NEAR(chi_squared({{5, 0}, {0, 5}}).statistic, 10.0, 1e-12);
}

TEST(ChiSquared, Errors) {
  EXPECT_THROW(chi_squared({{0, 0}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(chi_squared({{1, -1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(chi_squared({{1, 2}, {1}}), std::invalid_argument);
  EXPECT_THROW(chi_squared({{1, 2}}), std::invalid_argument);
}

// Independent statistic straight from the definition.
double chi2_by_hand(const std::vector<std::vector<double>>& t) {
  double n = 0;
  std::vector<double> rows(t.size(), 0), cols(t[0].size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      rows[i] += t[i][j];
      cols[j] += t[i][j];
      n += t[i][j];
    }
  }
  double s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      const double e = rows[i] * cols[j] / n;
      s += (t[i][j] - e) * (t[i][j] - e) / e;
    }
  }
  return s;
}

TEST(ChiSquared, PermutationAndScalingProperties) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 2 + rng() % 3, c = 2 + rng() % 4;
    std::vector<std::vector<double>> t(r, std::vector<double>(c));
    for (auto& row : t) {
      for (auto& v : row) v = 1 + static_cast<double>(rng() % 30);
    }
    const auto base = chi_squared(t);
    EXPECT_NEAR(base.statistic, chi2_by_hand(t), 1e-9);
    EXPECT_EQ(base.df, static_cast<int>((r - 1) * (c - 1)));
    EXPECT_GE(base.p, 0.0);
    EXPECT_LE(base.p, 1.0);
    auto perm = t;
    std::reverse(perm.begin(), perm.end());
    for (auto& row : perm) std::rotate(row.begin(), row.begin() + 1, row.end());
    EXPECT_NEAR(chi_squared(perm).statistic, base.statistic, 1e-9);
    const double m = 1 + static_cast<double>(rng() % 5);
    auto scaled = t;
    for (auto& row : scaled) {
      for (auto& v : row) v *= m;
    }
    EXPECT_NEAR(chi_squared(scaled).statistic, m * base.statistic, 1e-8 * m * (1 + base.statistic));
  }
}

TEST(TwoPropZ, SpecExamples) {
  auto eq = two_prop_z(50, 100, 50, 100);
  EXPECT_NEAR(eq.z, 0.0, 1e-12);
  EXPECT_NEAR(eq.p, 1.0, 1e-12);
  auto r = two_prop_z(60, 100, 40, 100);
  EXPECT_NEAR(r.z, 0.2 / std::sqrt(0.005), 1e-9);
  EXPECT_NEAR(r.z, 2.8284271247, 1e-6);
  EXPECT_THROW(two_prop_z(0, 10, 0, 10), std::invalid_argument);
  EXPECT_THROW(two_prop_z(10, 10, 10, 10), std::invalid_argument);
  auto extreme = two_prop_z(0, 10, 10, 10);
  EXPECT_TRUE(std::isfinite(extreme.z));
}

TEST(OddsRatio, SpecExamples) {
  auto r = odds_ratio(10, 20, 5, 40);
  EXPECT_NEAR(r.odds_ratio, 4.0, 1e-12);
  const double se = std::sqrt(0.375);
  EXPECT_NEAR(r.ci_low, std::exp(std::log(4.0) - 1.96 * se), 1e-9);
  EXPECT_NEAR(r.ci_high, std::exp(std::log(4.0) + 1.96 * se), 1e-9);
  EXPECT_NEAR(r.ci_low, 1.204, 1e-3);
  EXPECT_NEAR(r.ci_high, 13.29, 1e-2);
  EXPECT_FALSE(r.corrected);
  EXPECT_NEAR(odds_ratio(7, 7, 7, 7).odds_ratio, 1.0, 1e-12);
  auto z = odds_ratio(0, 5, 3, 4);
  EXPECT_TRUE(z.corrected);
  EXPECT_NEAR(z.odds_ratio, (0.5 * 4.5) / (5.5 * 3.5), 1e-12);
  EXPECT_TRUE(std::isfinite(z.ci_low));
  EXPECT_TRUE(std::isfinite(z.ci_high));
  EXPECT_THROW(odds_ratio(0, 0, 3, 4), std::invalid_argument);
  EXPECT_THROW(odds_ratio(0, 5, 0, 4), std::invalid_argument);
}

TEST(OddsRatio, ReciprocalAndContainsEstimate) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = 1 + rng() % 50, b = 1 + rng() % 50, c = 1 + rng() % 50,
                 d = 1 + rng() % 50;
    auto r = odds_ratio(a, b, c, d);
    EXPECT_NEAR(r.odds_ratio * odds_ratio(b, a, d, c).odds_ratio, 1.0, 1e-12);
    EXPECT_GT(r.odds_ratio, 0);
    EXPECT_LE(r.ci_low, r.odds_ratio);
    EXPECT_GE(r.ci_high, r.odds_ratio);
  }
}

TEST(Spearman, SpecExamples) {
  EXPECT_NEAR(spearman({1, 2, 3}, {10, 20, 30}).rho, 1.0, 1e-12);
  EXPECT_EQ(spearman({1, 2, 3}, {10, 20, 30}).p, 0.0);
  EXPECT_NEAR(spearman({1, 2, 3}, {3, 2, 1}).rho, -1.0, 1e-12);
  auto r = spearman({1, 2, 3, 4}, {2, 1, 4, 3});
  EXPECT_NEAR(r.rho, 0.6, 1e-12);
  // t = 0.6 * sqrt(2 / 0.64) = 1.06066 on 2 df.
  EXPECT_NEAR(r.p, 0.4, 1e-9);
  EXPECT_THROW(spearman({1, 1, 1}, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(spearman({1, 2}, {1, 2}), std::invalid_argument);
}

TEST(Spearman, TiesUseAverageRanks) {
  EXPECT_EQ(average_ranks({10, 20, 20, 30}), (std::vector<double>{1, 2.5, 2.5, 4}));
}

// Brute-force rho from the rank formula for distinct values.
double rank_formula(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = average_ranks(x), ry = average_ranks(y);
  double d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(x.size());
  return 1 - 6 * d2 / (n * (n * n - 1));
}

TEST(Spearman, MonotoneInvarianceAndRankFormula) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 20;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(i) + unit(rng) * 0.5;
      y[i] = unit(rng) * 100;
    }
    std::shuffle(x.begin(), x.end(), rng);
    auto base = spearman(x, y);
    EXPECT_NEAR(base.rho, rank_formula(x, y), 1e-12);
    std::vector<double> tx(n), ty(n);
    for (std::size_t i = 0; i < n; ++i) {
      tx[i] = std::exp(x[i] / 3);
      ty[i] = y[i] * y[i] * y[i] + 7;
    }
    EXPECT_NEAR(spearman(tx, ty).rho, base.rho, 1e-12);
    EXPECT_GE(base.rho, -1.0);
    EXPECT_LE(base.rho, 1.0);
  }
}

TEST(LogitProp, SpecExamples) {
  EXPECT_NEAR(logit_prop(5, 10), 0.0, 1e-15);
  const double p = 0.5 / 11;
  EXPECT_NEAR(logit_prop(0, 10), std::log(p / (1 - p)), 1e-12);
  EXPECT_NEAR(logit_prop(0, 10), -3.045, 1e-3);
  EXPECT_NEAR(logit_prop(10, 10), 3.045, 1e-3);
}

TEST(LogitProp, Symmetry) {
  for (int t = 1; t < 60; ++t) {
    for (int c = 0; c <= t; ++c) EXPECT_NEAR(logit_prop(c, t), -logit_prop(t - c, t), 1e-12);
  }
}

TEST(Distributions, ChiSquaredTailMatchesIntegration) {
  for (double df : {1.0, 2.0, 3.0, 4.0, 7.0, 12.0}) {
    for (double x : {0.05, 0.5, 1.0, 2.5, 5.0, 10.0, 20.0, 35.0}) {
      EXPECT_NEAR(chi2_sf(x, df), testing::chi2_sf_oracle(x, df), 1e-8)
          << "df=" << df << " x=" << x;
    }
  }
}

TEST(Distributions, NormalTailMatchesIntegration) {
  for (double z = -6; z <= 6; z += 0.37) {
    EXPECT_NEAR(normal_sf(z), testing::normal_sf_oracle(z), 1e-8) << z;
    EXPECT_NEAR(normal_cdf(z) + normal_sf(z), 1.0, 1e-14);
  }
}

TEST(Distributions, StudentTMatchesIntegration) {
  for (double df : {1.0, 2.0, 5.0, 10.0, 30.0}) {
    for (double t : {0.0, 0.3, 1.0, 2.0, 3.5, 8.0}) {
      EXPECT_NEAR(student_t_two_sided(t, df), testing::t_two_sided_oracle(t, df), 1e-8)
          << "df=" << df << " t=" << t;
    }
  }
}

TEST(Distributions, IncompleteGammaComplement) {
  for (double a : {0.5, 1.0, 3.0, 10.0}) {
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
      EXPECT_NEAR(gamma_p(a, x) + gamma_q(a, x), 1.0, 1e-13);
    }
  }
  // P(1, x) = 1 - e^-x.
  EXPECT_NEAR(gamma_p(1.0, 2.0), 1 - std::exp(-2.0), 1e-14);
  // I_x(1, 1) = x.
  EXPECT_NEAR(beta_inc(1, 1, 0.3), 0.3, 1e-14);
}

}  // namespace
}  // namespace amongus::stats
