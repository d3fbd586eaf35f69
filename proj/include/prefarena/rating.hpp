// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#ifndef PREFARENA_RATING_HPP
#define PREFARENA_RATING_HPP

#include "prefarena/types.hpp"

#include <span>
#include <utility>

namespace prefarena {

// K-factor for an item that has played `games_played` comparisons.
// FIXED -> k_fixed; DECAY -> max(k_min, k0 / (1 + games_played / 5)).
double k_factor(int games_played, const EloConfig& cfg);

// Sums the expected score of every item over the given pairs, evaluated with
// win_probability on the supplied (pre-round) ratings.
Eigen::VectorXd expected_scores(const Eigen::VectorXd& ratings,
                                std::span<const std::pair<ItemId, ItemId>> pairs,
                                const OracleConfig& cfg);

// One batch Elo round: every participating item moves by K * (S - E), where S
// is its score summed over `round_records` and E is the matching entry of
// `expected`. K is evaluated on the pre-round games_played count. Cumulative
// scores and game counts are updated from the records; non-participants are
// untouched.
void batch_elo_update(RatingTable& table,
                      std::span<const MatchRecord> round_records,
                      const Eigen::VectorXd& expected, const EloConfig& cfg);

// Log-likelihood of the records under the Bradley-Terry model with the given
// raw scores: sum of s_a*log P(a>b) + s_b*log P(b>a), P = sigmoid(f_a - f_b).
double bt_log_likelihood(const Eigen::VectorXd& scores,
                         std::span<const MatchRecord> records);

// Full-batch gradient of bt_log_likelihood: per record,
// grad_a += s_a - P(a>b) and grad_b += s_b - P(b>a).
Eigen::VectorXd bt_gradient(const Eigen::VectorXd& scores, int n_items,
                            std::span<const MatchRecord> records);

// Gradient-descent Bradley-Terry fit: scores start at zero and take
// cfg.epochs full-batch steps of size cfg.learning_rate. Returns raw
// (unscaled) scores; empty record lists yield all-zero scores.
Eigen::VectorXd fit_bradley_terry(std::span<const MatchRecord> records,
                                  int n_items, const BtFitConfig& cfg);

// Affine map to sample mean target_mu and standard deviation target_sigma
// (normalized by N). Constant input maps to all target_mu.
Eigen::VectorXd rescale(const Eigen::VectorXd& scores, double target_mu = 1000.0,
                        double target_sigma = 200.0);

// Elo change K * (1 - E(delta)) a winner sees against an opponent rated
// `delta` points below, per K value. Columns: delta, k_<K>...
CurveTable k_factor_curve(const std::vector<double>& delta_range,
                          const std::vector<double>& k_values,
                          const OracleConfig& cfg);

}  // namespace prefarena

#endif  // PREFARENA_RATING_HPP
