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

#include <utility>
#include <vector>

namespace amongus::stats {

// Right-continuous empirical CDF.
class Ecdf {
 public:
  // Throws std::invalid_argument on an empty sample or NaN values.
  explicit Ecdf(std::vector<double> samples);

  // Fraction of samples <= x.
  double operator()(double x) const;

  // (x, F(x)) at every distinct sample value, ascending.
  std::vector<std::pair<double, double>> steps() const;

  const std::vector<double>& sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

inline Ecdf ecdf(std::vector<double> samples) { return Ecdf(std::move(samples)); }

}  // namespace amongus::stats
