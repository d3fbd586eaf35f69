// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/experiments.hpp"

#include "prefarena/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace prefarena {

void ExperimentConfig::validate() const {
  if (n_items < 2) throw ConfigError("n_items must be >= 2");
  if (n_seeds < 1) throw ConfigError("n_seeds must be >= 1");
  if (budget < 1) throw ConfigError("budget must be >= 1");
  for (int b : sweep_budgets)
    if (b < 1) throw ConfigError("sweep budgets must be positive");
  for (int b : copeland_budgets)
    if (b < 1) throw ConfigError("copeland budgets must be positive");
  if (methods.empty()) throw ConfigError("at least one method is required");
  if (ig_epsilon < 0.0 || ig_epsilon >= 0.25)
    throw ConfigError("ig_epsilon must be in [0, 0.25)");
  if (swiss_r_max < 1 || infogain_r_max < 1)
    throw ConfigError("round caps must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (curve_delta_step <= 0.0) throw ConfigError("curve_delta_step must be > 0");
  oracle.validate();
  elo.validate();
  bt.validate();
}

ExperimentConfig default_experiment_config() {
  ExperimentConfig cfg;
  for (int b = 500; b <= 20000; b += 500) cfg.sweep_budgets.push_back(b);
  for (int k = 1; k <= 4; ++k) cfg.copeland_budgets.push_back(4950 * k);
  cfg.methods.assign(std::begin(kAllMethodKinds), std::end(kAllMethodKinds));
  // The paper's prose win percentages and the tie/loss crossover both follow
  // the base-10 reading of the rating curve, so experiments default to it.
  cfg.oracle.elo_base = EloBase::kTen;
  // The 20-epoch fit is underconverged at N=100 budgets; 100 epochs sits on
  // the accuracy plateau (many more epochs overfit the small per-item
  // samples).
  cfg.bt.epochs = 100;
  return cfg;
}

MethodSpec make_spec(const ExperimentConfig& cfg, MethodKind kind,
                     int budget) {
  MethodSpec spec;
  spec.kind = kind;
  spec.elo = cfg.elo;
  spec.elo.schedule = kind == MethodKind::kSwissInfogain
                          ? EloConfig::Schedule::kDecay
                          : EloConfig::Schedule::kFixed;
  spec.bt = cfg.bt;
  spec.ig_epsilon = cfg.ig_epsilon;
  spec.r_max = kind == MethodKind::kSwissInfogain ? cfg.infogain_r_max
                                                  : cfg.swiss_r_max;
  if (budget > 0) spec = calibrated_spec(spec, budget, cfg.n_items);
  return spec;
}

std::uint64_t run_seed(const ExperimentConfig& cfg, int seed_index) {
  return RngStream::mix64(cfg.base_seed, static_cast<std::uint64_t>(seed_index));
}

CellResult run_cell(const ExperimentConfig& cfg, const MethodSpec& spec,
                    int seed_index) {
  const std::uint64_t seed = run_seed(cfg, seed_index);
  RngStream pop_rng(RngStream::mix64(seed, kPopulationStreamTag));
  const LatentPopulation pop =
      sample_population(cfg.n_items, 1000.0, 200.0, pop_rng);
  const SimulationResult result = run_method(spec, pop, cfg.oracle, seed);
  const PearsonResult corr = pearson(result.estimated, pop.values);
  return {corr.r, corr.degenerate, result.m_comparisons};
}

namespace {

struct Task {
  MethodSpec spec;
  int budget_requested = 0;
};

// Runs every (task, seed) cell, spreading work over cfg.workers threads.
// Results land in pre-assigned slots, so the output is identical for any
// worker count.
std::vector<std::vector<CellResult>> run_task_matrix(
    const ExperimentConfig& cfg, const std::vector<Task>& tasks) {
  std::vector<std::vector<CellResult>> cells(
      tasks.size(), std::vector<CellResult>(cfg.n_seeds));
  const long total = static_cast<long>(tasks.size()) * cfg.n_seeds;
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (;;) {
      const long idx = next.fetch_add(1);
      if (idx >= total) return;
      const int task_idx = static_cast<int>(idx / cfg.n_seeds);
      const int seed_idx = static_cast<int>(idx % cfg.n_seeds);
      cells[task_idx][seed_idx] =
          run_cell(cfg, tasks[task_idx].spec, seed_idx);
    }
  };
  const int n_threads = std::min<long>(cfg.workers, total);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return cells;
}

ResultRow make_row(const Task& task, const std::vector<CellResult>& cells) {
  std::vector<double> rs;
  rs.reserve(cells.size());
  double m_sum = 0.0;
  for (const CellResult& cell : cells) {
    rs.push_back(cell.r);
    m_sum += static_cast<double>(cell.m);
  }
  const AggregateStat stat = aggregate(rs);
  ResultRow row;
  row.method = method_name(task.spec.kind);
  row.budget_requested = task.budget_requested;
  row.m_actual_mean = m_sum / static_cast<double>(cells.size());
  row.r_mean = stat.mean;
  row.r_ci_low = stat.ci_low;
  row.r_ci_high = stat.ci_high;
  row.n_seeds = stat.n_seeds;
  return row;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              if (a.method != b.method) return a.method < b.method;
              return a.budget_requested < b.budget_requested;
            });
}

}  // namespace

std::vector<CellResult> run_cells(const ExperimentConfig& cfg,
                                  const MethodSpec& spec) {
  return run_task_matrix(cfg, {Task{spec, 0}})[0];
}

int fixed_budget_for(const ExperimentConfig& cfg, MethodKind kind) {
  switch (kind) {
    case MethodKind::kBordaCopeland:
    case MethodKind::kEloCopeland:
      // One full round robin.
      return static_cast<int>(
          static_cast<long>(cfg.n_items) * (cfg.n_items - 1) / 2);
    case MethodKind::kSwiss:
    case MethodKind::kSwissInfogain:
      return 0;  // natural termination
    default:
      return cfg.budget;
  }
}

std::vector<ResultRow> fixed_budget_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Task> tasks;
  tasks.reserve(cfg.methods.size());
  for (MethodKind kind : cfg.methods) {
    const int budget = fixed_budget_for(cfg, kind);
    tasks.push_back({make_spec(cfg, kind, budget), budget});
  }
  const auto cells = run_task_matrix(cfg, tasks);
  std::vector<ResultRow> rows;
  rows.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    rows.push_back(make_row(tasks[i], cells[i]));
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> budget_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  static constexpr MethodKind kSwept[] = {
      MethodKind::kBradleyTerry, MethodKind::kBordaRnd, MethodKind::kEloRnd,
      MethodKind::kRndSwiss};
  static constexpr MethodKind kCopeland[] = {MethodKind::kBordaCopeland,
                                             MethodKind::kEloCopeland};
  static constexpr MethodKind kReference[] = {MethodKind::kSwiss,
                                              MethodKind::kSwissInfogain};
  auto enabled = [&](MethodKind kind) {
    return std::find(cfg.methods.begin(), cfg.methods.end(), kind) !=
           cfg.methods.end();
  };
  std::vector<Task> tasks;
  for (MethodKind kind : kSwept) {
    if (!enabled(kind)) continue;
    for (int budget : cfg.sweep_budgets)
      tasks.push_back({make_spec(cfg, kind, budget), budget});
  }
  for (MethodKind kind : kCopeland) {
    if (!enabled(kind)) continue;
    for (int budget : cfg.copeland_budgets)
      tasks.push_back({make_spec(cfg, kind, budget), budget});
  }
  for (MethodKind kind : kReference) {
    if (!enabled(kind)) continue;
    tasks.push_back({make_spec(cfg, kind, 0), 0});
  }
  const auto cells = run_task_matrix(cfg, tasks);
  std::vector<ResultRow> rows;
  rows.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    rows.push_back(make_row(tasks[i], cells[i]));
  sort_rows(rows);
  return rows;
}

std::optional<int> crossover_report(std::span<const ResultRow> rows,
                                    const std::string& method_a,
                                    double reference) {
  bool seen = false;
  std::optional<int> best;
  for (const ResultRow& row : rows) {
    if (row.method != method_a) continue;
    seen = true;
    if (row.budget_requested <= 0) continue;
    if (row.r_mean > reference &&
        (!best || row.budget_requested < *best)) {
      best = row.budget_requested;
    }
  }
  if (!seen)
    throw std::invalid_argument("crossover_report: unknown method '" +
                                method_a + "'");
  return best;
}

}  // namespace prefarena
