// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/oracle.hpp"

#include <cmath>

namespace prefarena {

namespace {
double log_base(const OracleConfig& cfg) {
  return cfg.elo_base == EloBase::kTen ? M_LN10 : 1.0;
}
}  // namespace

double win_probability(double r_a, double r_b, const OracleConfig& cfg) {
  const double x = (r_b - r_a) * log_base(cfg) / cfg.elo_scale;
  return 1.0 / (1.0 + std::exp(x));
}

double tie_probability(double v_a, double v_b, const OracleConfig& cfg) {
  return cfg.tie_coefficient * std::exp(-std::abs(v_a - v_b) / cfg.tie_sigma);
}

OutcomeDistribution outcome_distribution(double v_a, double v_b,
                                         const OracleConfig& cfg) {
  OutcomeDistribution dist;
  dist.p_tie = tie_probability(v_a, v_b, cfg);
  const double decisive = 1.0 - dist.p_tie;
  dist.p_a_wins = decisive * win_probability(v_a, v_b, cfg);
  dist.p_b_wins = decisive * win_probability(v_b, v_a, cfg);
  return dist;
}

Outcome sample_outcome(double v_a, double v_b, const OracleConfig& cfg,
                       RngStream& rng) {
  const OutcomeDistribution dist = outcome_distribution(v_a, v_b, cfg);
  const double u = rng.uniform_real();
  if (u < dist.p_a_wins) return Outcome::kWinA;
  if (u < dist.p_a_wins + dist.p_tie) return Outcome::kTie;
  return Outcome::kWinB;
}

CurveTable outcome_curve(const std::vector<double>& delta_range,
                         const OracleConfig& cfg) {
  CurveTable table;
  table.columns = {"delta", "p_win", "p_tie", "p_loss"};
  table.rows.reserve(delta_range.size());
  for (double delta : delta_range) {
    const OutcomeDistribution dist = outcome_distribution(delta, 0.0, cfg);
    table.rows.push_back({delta, dist.p_a_wins, dist.p_tie, dist.p_b_wins});
  }
  return table;
}

}  // namespace prefarena
