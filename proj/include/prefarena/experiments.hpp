// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// Orchestration of the two experiments:
//  - fixed-budget comparison: every method runs at the calibrated budget
//    (Copeland methods take one full round robin; the Swiss variants stop on
//    their own) and is scored against the hidden values across seeds;
//  - budget sweep: the budget-scalable methods run across a grid of budgets,
//    the Copeland methods at round-robin multiples, and the Swiss variants
//    contribute one reference row each (budget_requested = 0).
//
// Populations are redrawn per seed and shared across methods within a seed,
// so cross-method comparisons are paired. Per-method draw streams are derived
// from (base_seed, seed index, method tag); removing one method from the
// lineup does not change any other method's rows.

#ifndef PREFARENA_EXPERIMENTS_HPP
#define PREFARENA_EXPERIMENTS_HPP

#include "prefarena/methods.hpp"
#include "prefarena/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prefarena {

struct ExperimentConfig {
  int n_items = 100;
  int n_seeds = 100;
  std::uint64_t base_seed = 42;
  int budget = 550;
  std::vector<int> sweep_budgets;     // default 500..20000 step 500
  std::vector<int> copeland_budgets;  // default multiples of 4950
  std::vector<MethodKind> methods;    // default: all eight

  OracleConfig oracle;
  EloConfig elo;
  BtFitConfig bt;
  double ig_epsilon = 0.2;
  int swiss_r_max = 12;
  int infogain_r_max = 50;

  int workers = 1;
  double curve_delta_max = 2000.0;
  double curve_delta_step = 20.0;

  void validate() const;
};

// The experiment defaults (N=100, 100 seeds, budget 550, sweep 500..20000,
// base-10 oracle, fixed K=32, decay 40->10 for InfoGain).
ExperimentConfig default_experiment_config();

// Builds the fully-parameterized spec a method uses under this config.
// budget <= 0 selects the method's own defaults (Swiss variants).
MethodSpec make_spec(const ExperimentConfig& cfg, MethodKind kind, int budget);

struct ResultRow {
  std::string method;
  int budget_requested = 0;  // 0 marks natural termination (Swiss variants)
  double m_actual_mean = 0.0;
  double r_mean = 0.0;
  double r_ci_low = 0.0;
  double r_ci_high = 0.0;
  int n_seeds = 0;
};

struct CellResult {
  double r = 0.0;
  bool degenerate = false;
  long m = 0;
};

// Runs one (method spec, seed index) cell: fresh population, one simulation,
// correlation against the hidden values.
CellResult run_cell(const ExperimentConfig& cfg, const MethodSpec& spec,
                    int seed_index);

// Per-seed cells for one spec, executed on the configured worker count.
std::vector<CellResult> run_cells(const ExperimentConfig& cfg,
                                  const MethodSpec& spec);

std::vector<ResultRow> fixed_budget_experiment(const ExperimentConfig& cfg);

std::vector<ResultRow> budget_sweep(const ExperimentConfig& cfg);

// Smallest budget among method_a's rows whose r_mean exceeds the reference
// value; nullopt when none does.
std::optional<int> crossover_report(std::span<const ResultRow> rows,
                                    const std::string& method_a,
                                    double reference);

// The budget a fixed-budget run requests from `kind` under this config.
int fixed_budget_for(const ExperimentConfig& cfg, MethodKind kind);

// Stream-derivation tags (documented so runs can be reproduced externally):
// run seed   = mix64(base_seed, seed_index)
// population = RngStream(mix64(run_seed, kPopulationStreamTag))
// method     = RngStream(run_seed).child(method_stream_tag(spec))
inline constexpr std::uint64_t kPopulationStreamTag = 0x706F70756C617465ULL;

std::uint64_t run_seed(const ExperimentConfig& cfg, int seed_index);

}  // namespace prefarena

#endif  // PREFARENA_EXPERIMENTS_HPP
