// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/rating.hpp"

#include "prefarena/oracle.hpp"

#include <cmath>
#include <string>

namespace prefarena {

double k_factor(int games_played, const EloConfig& cfg) {
  if (cfg.schedule == EloConfig::Schedule::kFixed) return cfg.k_fixed;
  return std::max(cfg.k_min, cfg.k0 / (1.0 + games_played / 5.0));
}

Eigen::VectorXd expected_scores(const Eigen::VectorXd& ratings,
                                std::span<const std::pair<ItemId, ItemId>> pairs,
                                const OracleConfig& cfg) {
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(ratings.size());
  for (const auto& [a, b] : pairs) {
    const double p = win_probability(ratings[a], ratings[b], cfg);
    expected[a] += p;
    expected[b] += 1.0 - p;
  }
  return expected;
}

void batch_elo_update(RatingTable& table,
                      std::span<const MatchRecord> round_records,
                      const Eigen::VectorXd& expected, const EloConfig& cfg) {
  const int n = table.size();
  Eigen::VectorXd round_score = Eigen::VectorXd::Zero(n);
  Eigen::VectorXi round_games = Eigen::VectorXi::Zero(n);
  for (const MatchRecord& record : round_records) {
    if (record.a < 0 || record.a >= n || record.b < 0 || record.b >= n)
      throw IntegrityError("match record references item outside the table");
    const auto [s_a, s_b] = score_pair(record.outcome);
    round_score[record.a] += s_a;
    round_score[record.b] += s_b;
    round_games[record.a] += 1;
    round_games[record.b] += 1;
  }
  for (int i = 0; i < n; ++i) {
    if (round_games[i] == 0) continue;
    const double k = k_factor(table.games_played[i], cfg);
    table.ratings[i] += k * (round_score[i] - expected[i]);
  }
  table.scores += round_score;
  table.games_played += round_games;
}

namespace {
double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
}  // namespace

double bt_log_likelihood(const Eigen::VectorXd& scores,
                         std::span<const MatchRecord> records) {
  double ll = 0.0;
  for (const MatchRecord& record : records) {
    const auto [s_a, s_b] = score_pair(record.outcome);
    const double p = sigmoid(scores[record.a] - scores[record.b]);
    ll += s_a * std::log(p) + s_b * std::log(1.0 - p);
  }
  return ll;
}

Eigen::VectorXd bt_gradient(const Eigen::VectorXd& scores, int n_items,
                            std::span<const MatchRecord> records) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(n_items);
  for (const MatchRecord& record : records) {
    const auto [s_a, s_b] = score_pair(record.outcome);
    const double p = sigmoid(scores[record.a] - scores[record.b]);
    const double d = s_a - p;  // s_b - P(b>a) == -d
    grad[record.a] += d;
    grad[record.b] -= d;
  }
  return grad;
}

Eigen::VectorXd fit_bradley_terry(std::span<const MatchRecord> records,
                                  int n_items, const BtFitConfig& cfg) {
  if (n_items < 2) throw ConfigError("bradley-terry fit needs >= 2 items");
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(n_items);
  if (records.empty()) return scores;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    scores += cfg.learning_rate * bt_gradient(scores, n_items, records);
  }
  return scores;
}

Eigen::VectorXd rescale(const Eigen::VectorXd& scores, double target_mu,
                        double target_sigma) {
  const double n = static_cast<double>(scores.size());
  const double mean = scores.mean();
  const double sd = std::sqrt((scores.array() - mean).square().sum() / n);
  if (sd == 0.0)
    return Eigen::VectorXd::Constant(scores.size(), target_mu);
  return (((scores.array() - mean) / sd) * target_sigma + target_mu).matrix();
}

CurveTable k_factor_curve(const std::vector<double>& delta_range,
                          const std::vector<double>& k_values,
                          const OracleConfig& cfg) {
  CurveTable table;
  table.columns.push_back("delta");
  for (double k : k_values) {
    std::string name = "k_" + std::to_string(k);
    name.erase(name.find_last_not_of('0') + 1);
    if (!name.empty() && name.back() == '.') name.pop_back();
    table.columns.push_back(name);
  }
  for (double delta : delta_range) {
    std::vector<double> row;
    row.push_back(delta);
    const double expected = win_probability(delta, 0.0, cfg);
    for (double k : k_values) row.push_back(k * (1.0 - expected));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace prefarena
