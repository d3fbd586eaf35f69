// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefarena/experiments.hpp"

#include <algorithm>

using namespace prefarena;

namespace {

// Small config so the whole file runs in seconds.
ExperimentConfig small_config() {
  ExperimentConfig cfg = default_experiment_config();
  cfg.n_items = 20;
  cfg.n_seeds = 3;
  cfg.budget = 110;
  cfg.sweep_budgets = {100, 200, 300};
  cfg.copeland_budgets = {190};
  cfg.swiss_r_max = 6;
  cfg.infogain_r_max = 10;
  cfg.bt.epochs = 30;
  return cfg;
}

}  // namespace

TEST_CASE("defaults match the reference setup") {
  const ExperimentConfig cfg = default_experiment_config();
  CHECK(cfg.n_items == 100);
  CHECK(cfg.n_seeds == 100);
  CHECK(cfg.budget == 550);
  CHECK(cfg.sweep_budgets.size() == 40);
  CHECK(cfg.sweep_budgets.front() == 500);
  CHECK(cfg.sweep_budgets.back() == 20000);
  CHECK(cfg.copeland_budgets == std::vector<int>{4950, 9900, 14850, 19800});
  CHECK(cfg.methods.size() == 8);
  CHECK(cfg.oracle.elo_base == EloBase::kTen);
  cfg.validate();
}

TEST_CASE("fixed-budget experiment returns one row per method") {
  const ExperimentConfig cfg = small_config();
  const std::vector<ResultRow> rows = fixed_budget_experiment(cfg);
  CHECK(rows.size() == 8);
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const ResultRow& a, const ResultRow& b) {
                         return a.method < b.method;
                       }));
  for (const ResultRow& row : rows) {
    CHECK(row.n_seeds == 3);
    CHECK(row.r_ci_low <= row.r_mean);
    CHECK(row.r_mean <= row.r_ci_high);
            }
}

TEST_CASE("copeland rows use one full round robin") {
  const ExperimentConfig cfg = small_config();
  const std::vector<ResultRow> rows = fixed_budget_experiment(cfg);
  for (const ResultRow& row : rows) {
    if (row.method == "borda_copeland" || row.method == "elo_copeland") {
      CHECK(row.budget_requested == 190);  // C(20,2)
      CHECK(row.m_actual_mean == doctest::Approx(190.0));
    }
  }
}

TEST_CASE("removing one method leaves the other rows unchanged") {
  ExperimentConfig cfg = small_config();
  const std::vector<ResultRow> all = fixed_budget_experiment(cfg);
  cfg.methods = {MethodKind::kBradleyTerry, MethodKind::kSwiss};
  const std::vector<ResultRow> subset = fixed_budget_experiment(cfg);
  for (const ResultRow& row : subset) {
    const auto match = std::find_if(
        all.begin(), all.end(),
        [&](const ResultRow& r) { return r.method == row.method; });
    REQUIRE(match != all.end());
    CHECK(match->r_mean == row.r_mean);
    CHECK(match->m_actual_mean == row.m_actual_mean);
  }
}

TEST_CASE("sweep row arithmetic") {
  const ExperimentConfig cfg = small_config();
  const std::vector<ResultRow> rows = budget_sweep(cfg);
  // 3 budgets x 4 swept methods + 1 copeland budget x 2 + 2 reference rows
  CHECK(rows.size() == 3 * 4 + 2 + 2);
  int reference_rows = 0;
  for (const ResultRow& row : rows) reference_rows += row.budget_requested == 0;
  CHECK(reference_rows == 2);
}

TEST_CASE("the sweep is identical for any worker count") {
  ExperimentConfig cfg = small_config();
  cfg.workers = 1;
  const std::vector<ResultRow> serial = budget_sweep(cfg);
  cfg.workers = 4;
  const std::vector<ResultRow> parallel = budget_sweep(cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].method == parallel[i].method);
    CHECK(serial[i].budget_requested == parallel[i].budget_requested);
    CHECK(serial[i].r_mean == parallel[i].r_mean);
    CHECK(serial[i].m_actual_mean == parallel[i].m_actual_mean);
  }
}

TEST_CASE("run_cell is deterministic and paired across methods") {
  const ExperimentConfig cfg = small_config();
  const MethodSpec spec = make_spec(cfg, MethodKind::kBordaRnd, cfg.budget);
  const CellResult a = run_cell(cfg, spec, 0);
  const CellResult b = run_cell(cfg, spec, 0);
  CHECK(a.r == b.r);
  CHECK(a.m == b.m);
  const CellResult other_seed = run_cell(cfg, spec, 1);
  CHECK(a.r != other_seed.r);
}

TEST_CASE("crossover report finds the smallest exceeding budget") {
  std::vector<ResultRow> rows;
  for (int budget : {100, 200, 300, 400}) {
    ResultRow row;
    row.method = "bradley_terry";
    row.budget_requested = budget;
    row.r_mean = budget / 500.0;
    rows.push_back(row);
  }
  CHECK(crossover_report(rows, "bradley_terry", 0.0) == 100);
  CHECK(crossover_report(rows, "bradley_terry", 0.45) == 300);
  CHECK(!crossover_report(rows, "bradley_terry", 1.01).has_value());
  CHECK_THROWS_AS(crossover_report(rows, "nope", 0.5), std::invalid_argument);
}

TEST_CASE("method stream tags separate budget variants") {
  const ExperimentConfig cfg = small_config();
  const MethodSpec a = make_spec(cfg, MethodKind::kBradleyTerry, 100);
  const MethodSpec b = make_spec(cfg, MethodKind::kBradleyTerry, 200);
  CHECK(method_stream_tag(a) != method_stream_tag(b));
}
