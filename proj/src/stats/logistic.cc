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

#include "amongus/stats/logistic.h"

#include <cmath>

#include "amongus/stats/distributions.h"

namespace amongus::stats {
namespace {

constexpr int kMaxIterations = 100;
constexpr double kScoreTolerance = 1e-8;

Eigen::VectorXd fitted(const Eigen::MatrixXd& x, const Eigen::VectorXd& beta) {
  Eigen::VectorXd eta = x * beta;
  return eta.unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
}

int rank_of(const Eigen::MatrixXd& m) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

CollinearityError::CollinearityError(std::vector<std::string> columns)
    : std::invalid_argument("logistic_fit: collinear columns: " + join(columns)),
      columns_(std::move(columns)) {}

double log_likelihood(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& beta) {
  const Eigen::VectorXd eta = x * beta;
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    // log(1 + e^eta) without overflow.
    const double softplus =
        eta[i] > 0 ? eta[i] + std::log1p(std::exp(-eta[i])) : std::log1p(std::exp(eta[i]));
    ll += y[i] * eta[i] - softplus;
  }
  return ll;
}

RegressionFit logistic_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           std::vector<std::string> names) {
  const Eigen::Index n = x.rows();
  const Eigen::Index k = x.cols();
  if (y.size() != n) throw std::invalid_argument("logistic_fit: rows(X) != len(y)");
  if (static_cast<Eigen::Index>(names.size()) != k) {
    throw std::invalid_argument("logistic_fit: one name per column required");
  }
  if (n < k + 1) {
    throw std::invalid_argument("logistic_fit: need at least predictors + 1 rows");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (y[i] != 0.0 && y[i] != 1.0) {
      throw std::invalid_argument("logistic_fit: y must be 0 or 1");
    }
  }
  if (y.minCoeff() == y.maxCoeff()) {
    throw std::invalid_argument("logistic_fit: outcome is constant");
  }
  if (rank_of(x) < k) {
    // Columns that add nothing to the span of the ones before them.
    std::vector<std::string> bad;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index j = 0; j < k; ++j) {
      Eigen::MatrixXd sub(n, static_cast<Eigen::Index>(kept.size()) + 1);
      for (std::size_t c = 0; c < kept.size(); ++c) sub.col(c) = x.col(kept[c]);
      sub.col(sub.cols() - 1) = x.col(j);
      if (rank_of(sub) == sub.cols()) {
        kept.push_back(j);
      } else {
        bad.push_back(names[j]);
      }
    }
    throw CollinearityError(std::move(bad));
  }

  RegressionFit fit;
  fit.names = std::move(names);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
  Eigen::MatrixXd info(k, k);
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd p = fitted(x, beta);
    const Eigen::VectorXd score = x.transpose() * (y - p);
    const Eigen::VectorXd w = p.cwiseProduct(Eigen::VectorXd::Ones(n) - p);
    info = x.transpose() * w.asDiagonal() * x;
    fit.iterations = iter;
    fit.max_abs_score = score.cwiseAbs().maxCoeff();
    if (fit.max_abs_score < kScoreTolerance) {
      fit.converged = true;
      break;
    }
    if (iter == kMaxIterations) break;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success) break;
    const Eigen::VectorXd step = ldlt.solve(score);
    if (!step.allFinite()) break;
    beta += step;
  }

  const Eigen::VectorXd p = fitted(x, beta);
  const double min_w = p.cwiseProduct(Eigen::VectorXd::Ones(n) - p).minCoeff();
  // Every row on the right side of 0.5 means a separating hyperplane exists,
  // so no finite maximum does.
  const bool all_correct = ((y - p).cwiseAbs().array() < 0.5).all();
  if (!fit.converged || min_w < 1e-10 || all_correct) {
    fit.separation = true;
    fit.converged = false;
    fit.warnings.push_back(
        "possible separation: coefficients diverge and fitted probabilities "
        "reach 0 or 1");
  }
  const Eigen::MatrixXd cov = info.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
  fit.log_likelihood = log_likelihood(x, y, beta);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double b = beta[j];
    const double se = std::sqrt(std::max(cov(j, j), 0.0));
    fit.beta.push_back(b);
    fit.se.push_back(se);
    fit.ci_low.push_back(b - kWaldZ * se);
    fit.ci_high.push_back(b + kWaldZ * se);
    const double z = se > 0 ? b / se : 0.0;
    fit.z.push_back(z);
    fit.p.push_back(2.0 * normal_sf(std::abs(z)));
  }
  return fit;
}

RegressionFit logistic_fit(const std::vector<std::vector<double>>& predictors,
                           const std::vector<double>& y,
                           const std::vector<std::string>& predictor_names) {
  const Eigen::Index n = static_cast<Eigen::Index>(predictors.size());
  const Eigen::Index k = static_cast<Eigen::Index>(predictor_names.size()) + 1;
  Eigen::MatrixXd x(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(predictors[i].size()) != k - 1) {
      throw std::invalid_argument("logistic_fit: ragged predictor rows");
    }
    x(i, 0) = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) x(i, j) = predictors[i][j - 1];
  }
  Eigen::VectorXd yy = Eigen::Map<const Eigen::VectorXd>(y.data(), y.size());
  std::vector<std::string> names = {"intercept"};
  names.insert(names.end(), predictor_names.begin(), predictor_names.end());
  return logistic_fit(x, yy, std::move(names));
}

}  // namespace amongus::stats
