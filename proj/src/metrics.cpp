// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace prefarena {

PearsonResult pearson(const Eigen::VectorXd& estimated,
                      const Eigen::VectorXd& truth) {
  if (estimated.size() != truth.size())
    throw std::invalid_argument("pearson: length mismatch");
  if (estimated.size() < 2)
    throw std::invalid_argument("pearson: need at least 2 points");
  const Eigen::ArrayXd x = estimated.array() - estimated.mean();
  const Eigen::ArrayXd y = truth.array() - truth.mean();
  const double ssx = (x * x).sum();
  const double ssy = (y * y).sum();
  if (ssx == 0.0 || ssy == 0.0) return {0.0, true};
  return {(x * y).sum() / std::sqrt(ssx * ssy), false};
}

AggregateStat aggregate(std::span<const double> values, double confidence) {
  if (values.empty()) throw std::invalid_argument("aggregate: empty input");
  if (confidence != 0.95)
    throw std::invalid_argument("aggregate: only the 95% level is supported");
  const int n = static_cast<int>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double sd = 0.0;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    sd = std::sqrt(ss / (n - 1));
  }
  const double half = 1.96 * sd / std::sqrt(static_cast<double>(n));
  return {mean, mean - half, mean + half, n, sd};
}

}  // namespace prefarena
