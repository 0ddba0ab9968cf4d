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

#pragma once

#include <vector>

namespace amongus::stats {

struct ChiSquaredResult {
  double statistic = 0.0;
  int df = 0;
  double p = 1.0;
};

// Pearson test of independence on an r x c table of counts (r, c >= 2).
// Throws std::invalid_argument on negative cells, ragged rows or a zero
// margin.
ChiSquaredResult chi_squared(const std::vector<std::vector<double>>& table);

struct ZTestResult {
  double z = 0.0;
  double p = 1.0;  // two-sided
};

// Pooled two-proportion z test of k1/n1 against k2/n2. Throws
// std::invalid_argument when the pooled proportion is 0 or 1.
ZTestResult two_prop_z(double k1, double n1, double k2, double n2);

struct OddsRatioResult {
  double odds_ratio = 1.0;
  double ci_low = 1.0;
  double ci_high = 1.0;
  bool corrected = false;  // +0.5 added to every cell
};

// Table [[a, b], [c, d]]; OR = ad / bc. Throws when a whole row or column is
// zero.
OddsRatioResult odds_ratio(double a, double b, double c, double d);

struct CorrelationResult {
  double rho = 0.0;
  double p = 1.0;  // t approximation with n - 2 df; 0 when |rho| = 1
  std::size_t n = 0;
};

// Average ranks (1-based) with ties sharing the mean rank.
std::vector<double> average_ranks(const std::vector<double>& v);

// Both throw std::invalid_argument for n < 3, unequal lengths or a constant
// input.
CorrelationResult pearson(const std::vector<double>& x, const std::vector<double>& y);
CorrelationResult spearman(const std::vector<double>& x, const std::vector<double>& y);

// ln(p / (1 - p)) with p = (count + 0.5) / (total + 1).
double logit_prop(double count, double total);

}  // namespace amongus::stats
