// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// The simulated annotator. A comparison of two latent values first draws a
// tie with probability
//     P(tie) = tie_coefficient * exp(-|v_a - v_b| / tie_sigma)
// and the remaining mass is split by the logistic curve
//     P(a wins | decisive) = 1 / (1 + base^((v_b - v_a) / elo_scale)).
// At equal values all three outcomes have probability 1/3. For large value
// gaps the tie probability can exceed the probability of the weaker item
// winning (base 10), which the outcome curve makes visible.

#ifndef PREFARENA_ORACLE_HPP
#define PREFARENA_ORACLE_HPP

#include "prefarena/rng.hpp"
#include "prefarena/types.hpp"

#include <vector>

namespace prefarena {

struct OutcomeDistribution {
  double p_a_wins = 0.0;
  double p_tie = 0.0;
  double p_b_wins = 0.0;
};

// Logistic win probability on the configured base and scale. Also used by the
// rating-based schedulers for expected scores and information gain, applied
// to estimated ratings instead of latent values.
double win_probability(double r_a, double r_b, const OracleConfig& cfg);

double tie_probability(double v_a, double v_b, const OracleConfig& cfg);

OutcomeDistribution outcome_distribution(double v_a, double v_b,
                                         const OracleConfig& cfg);

// Categorical draw from outcome_distribution. Consumes exactly one uniform
// deviate: u < p_a -> WIN_A, u < p_a + p_tie -> TIE, else WIN_B.
Outcome sample_outcome(double v_a, double v_b, const OracleConfig& cfg,
                       RngStream& rng);

// Evaluates the outcome distribution over a grid of value differences.
// Columns: delta, p_win, p_tie, p_loss.
CurveTable outcome_curve(const std::vector<double>& delta_range,
                         const OracleConfig& cfg);

}  // namespace prefarena

#endif  // PREFARENA_ORACLE_HPP
