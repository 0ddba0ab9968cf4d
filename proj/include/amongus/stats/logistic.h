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

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace amongus::stats {

struct RegressionFit {
  std::vector<std::string> names;  // one per column of the design matrix
  std::vector<double> beta;
  std::vector<double> se;
  std::vector<double> ci_low;   // beta - 1.96 se
  std::vector<double> ci_high;  // beta + 1.96 se
  std::vector<double> z;
  std::vector<double> p;        // two-sided Wald p-values
  bool converged = false;
  bool separation = false;      // fitted probabilities collapsed to 0 or 1
  int iterations = 0;
  double log_likelihood = 0.0;
  double max_abs_score = 0.0;
  std::vector<std::string> warnings;
};

class CollinearityError : public std::invalid_argument {
 public:
  explicit CollinearityError(std::vector<std::string> columns);
  const std::vector<std::string>& columns() const { return columns_; }

 private:
  std::vector<std::string> columns_;
};

inline constexpr double kWaldZ = 1.96;

// Maximum-likelihood logistic regression by IRLS. `x` already contains the
// intercept column when one is wanted. Stops when max |score| < 1e-8 or after
// 100 iterations. Throws std::invalid_argument when y is constant, not 0/1,
// or there are fewer rows than columns + 1; CollinearityError when the design
// is rank deficient.
RegressionFit logistic_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           std::vector<std::string> names);

// Prepends an "intercept" column to row-major predictors.
RegressionFit logistic_fit(const std::vector<std::vector<double>>& predictors,
                           const std::vector<double>& y,
                           const std::vector<std::string>& predictor_names);

double log_likelihood(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& beta);

}  // namespace amongus::stats
