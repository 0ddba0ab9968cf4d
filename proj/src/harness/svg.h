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

#include <string>
#include <utility>
#include <vector>

namespace amongus::svg {

struct StepSeries {
  std::string name;
  std::vector<std::pair<double, double>> steps;  // (x, F(x)), ascending x
};

// ECDF step curves on one set of axes.
std::string step_plot(const std::string& title, const std::string& x_label,
                      const std::vector<StepSeries>& series);

struct Interval {
  std::string label;
  double estimate = 0.0;
  double low = 0.0;
  double high = 0.0;
};

// Horizontal point-interval chart with a dashed reference line at `ref`.
// With log_x the axis is logarithmic (odds ratios).
std::string interval_plot(const std::string& title, const std::string& x_label,
                          const std::vector<Interval>& rows, double ref,
                          bool log_x);

}  // namespace amongus::svg
