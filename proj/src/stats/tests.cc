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

#include "amongus/stats/tests.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "amongus/stats/distributions.h"
#include "amongus/stats/logistic.h"

namespace amongus::stats {

ChiSquaredResult chi_squared(const std::vector<std::vector<double>>& table) {
  const std::size_t r = table.size();
  if (r < 2) throw std::invalid_argument("chi_squared: need at least 2 rows");
  const std::size_t c = table[0].size();
  if (c < 2) throw std::invalid_argument("chi_squared: need at least 2 columns");
  std::vector<double> rows(r, 0.0), cols(c, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    if (table[i].size() != c) throw std::invalid_argument("chi_squared: ragged table");
    for (std::size_t j = 0; j < c; ++j) {
      const double v = table[i][j];
      if (!(v >= 0)) throw std::invalid_argument("chi_squared: negative count");
      rows[i] += v;
      cols[j] += v;
      total += v;
    }
  }
  for (double m : rows) {
    if (m == 0) throw std::invalid_argument("chi_squared: zero row total");
  }
  for (double m : cols) {
    if (m == 0) throw std::invalid_argument("chi_squared: zero column total");
  }
  ChiSquaredResult out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const double e = rows[i] * cols[j] / total;
      const double d = table[i][j] - e;
      out.statistic += d * d / e;
    }
  }
  out.df = static_cast<int>((r - 1) * (c - 1));
  out.p = chi2_sf(out.statistic, out.df);
  return out;
}

ZTestResult two_prop_z(double k1, double n1, double k2, double n2) {
  if (!(n1 > 0) || !(n2 > 0) || k1 < 0 || k2 < 0 || k1 > n1 || k2 > n2) {
    throw std::invalid_argument("two_prop_z: need 0 <= k <= n and n > 0");
  }
  const double pooled = (k1 + k2) / (n1 + n2);
  if (pooled <= 0 || pooled >= 1) {
    throw std::invalid_argument("two_prop_z: pooled proportion is 0 or 1");
  }
  const double se = std::sqrt(pooled * (1 - pooled) * (1 / n1 + 1 / n2));
  ZTestResult out;
  out.z = (k1 / n1 - k2 / n2) / se;
  out.p = std::min(1.0, 2.0 * normal_sf(std::abs(out.z)));
  return out;
}

OddsRatioResult odds_ratio(double a, double b, double c, double d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw std::invalid_argument("odds_ratio: negative count");
  }
  if ((a == 0 && b == 0) || (c == 0 && d == 0) || (a == 0 && c == 0) ||
      (b == 0 && d == 0)) {
    throw std::invalid_argument("odds_ratio: a whole row or column is zero");
  }
  OddsRatioResult out;
  if (a == 0 || b == 0 || c == 0 || d == 0) {
    a += 0.5;
    b += 0.5;
    c += 0.5;
    d += 0.5;
    out.corrected = true;
  }
  const double log_or = std::log(a) + std::log(d) - std::log(b) - std::log(c);
  const double se = std::sqrt(1 / a + 1 / b + 1 / c + 1 / d);
  out.odds_ratio = std::exp(log_or);
  out.ci_low = std::exp(log_or - kWaldZ * se);
  out.ci_high = std::exp(log_or + kWaldZ * se);
  return out;
}

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation: unequal lengths");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("correlation: need n >= 3");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) throw std::invalid_argument("correlation: constant input");
  CorrelationResult out;
  out.n = n;
  out.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  if (std::abs(out.rho) >= 1.0 - 1e-15) {
    out.rho = out.rho > 0 ? 1.0 : -1.0;
    out.p = 0.0;
    return out;
  }
  const double df = static_cast<double>(n - 2);
  const double t = out.rho * std::sqrt(df / (1 - out.rho * out.rho));
  out.p = student_t_two_sided(t, df);
  return out;
}

CorrelationResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation: unequal lengths");
  return pearson(average_ranks(x), average_ranks(y));
}

double logit_prop(double count, double total) {
  if (count < 0 || count > total || total < 1) {
    throw std::invalid_argument("logit_prop: need 0 <= count <= total, total >= 1");
  }
  const double p = (count + 0.5) / (total + 1.0);
  return std::log(p / (1.0 - p));
}

}  // namespace amongus::stats
