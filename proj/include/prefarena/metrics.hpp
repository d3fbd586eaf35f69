// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#ifndef PREFARENA_METRICS_HPP
#define PREFARENA_METRICS_HPP

#include <Eigen/Dense>

#include <span>

namespace prefarena {

struct PearsonResult {
  double r = 0.0;
  // Set when either input has zero variance; r is reported as 0 so that
  // zero-budget runs still aggregate.
  bool degenerate = false;
};

// Sample Pearson correlation. Throws std::invalid_argument on length
// mismatch or fewer than two points.
PearsonResult pearson(const Eigen::VectorXd& estimated,
                      const Eigen::VectorXd& truth);

struct AggregateStat {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int n_seeds = 0;
  double sd = 0.0;
};

// Mean, sample standard deviation (N-1) and the normal-approximation
// confidence interval mean +/- 1.96 * sd / sqrt(n). Only the 95% level is
// supported; a single value collapses the interval to the point.
AggregateStat aggregate(std::span<const double> values,
                        double confidence = 0.95);

}  // namespace prefarena

#endif  // PREFARENA_METRICS_HPP
