// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/io.hpp"

#include "prefarena/rating.hpp"
#include "prefarena/oracle.hpp"

#include <cstdlib>
#include <iostream>

namespace prefarena {

namespace {

std::vector<double> delta_grid(double max_abs, double step) {
  std::vector<double> grid;
  for (double d = -max_abs; d <= max_abs + step * 1e-9; d += step)
    grid.push_back(d);
  return grid;
}

ExperimentConfig load_config(const CliCommand& command) {
  ExperimentConfig cfg = parse_config(
      command.config_path.value_or(std::filesystem::path{}), command.overrides);
  if (command.seed) {
    cfg.base_seed = *command.seed;
  } else if (!command.config_path && std::getenv("PREFARENA_SEED") != nullptr) {
    // Fallback base seed when neither --seed nor a config file pins one.
    cfg.base_seed = std::strtoull(std::getenv("PREFARENA_SEED"), nullptr, 10);
  }
  if (command.workers) cfg.workers = *command.workers;
  cfg.validate();
  return cfg;
}

void ensure_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
}

int do_run(const CliCommand& command) {
  const ExperimentConfig cfg = load_config(command);
  ensure_output_dir(command.output_dir);
  const std::vector<ResultRow> rows = fixed_budget_experiment(cfg);
  write_plot(rows, PlotKind::kCorrelationBars,
             command.output_dir / "results.svg");
  std::cout << "fixed-budget experiment: " << rows.size() << " methods, "
            << cfg.n_seeds << " seeds\n";
  for (const ResultRow& row : rows) {
    std::cout << "  " << row.method << ": r=" << row.r_mean
              << " (M=" << row.m_actual_mean << ")\n";
  }
  std::cout << "wrote " << (command.output_dir / "results.csv").string()
            << " and results.svg\n";
  return 0;
}

int do_sweep(const CliCommand& command) {
  const ExperimentConfig cfg = load_config(command);
  ensure_output_dir(command.output_dir);
  const std::vector<ResultRow> rows = budget_sweep(cfg);
  write_plot(rows, PlotKind::kSweepBands, command.output_dir / "sweep.svg");
  std::cout << "budget sweep: " << rows.size() << " rows, " << cfg.n_seeds
            << " seeds, workers=" << cfg.workers << "\n";
  std::cout << "wrote " << (command.output_dir / "sweep.csv").string()
            << " and sweep.svg\n";
  return 0;
}

int do_curves(const CliCommand& command) {
  const ExperimentConfig cfg = load_config(command);
  ensure_output_dir(command.output_dir);
  const CurveTable table = outcome_curve(
      delta_grid(cfg.curve_delta_max, cfg.curve_delta_step), cfg.oracle);
  write_plot(table, PlotKind::kOutcomeCurve,
             command.output_dir / "outcome_curve.svg");
  std::cout << "wrote " << (command.output_dir / "outcome_curve.csv").string()
            << " and outcome_curve.svg\n";
  return 0;
}

int do_k_curve(const CliCommand& command) {
  const ExperimentConfig cfg = load_config(command);
  ensure_output_dir(command.output_dir);
  const CurveTable table =
      k_factor_curve(delta_grid(cfg.curve_delta_max, cfg.curve_delta_step),
                     {10.0, 20.0, 32.0, 40.0}, cfg.oracle);
  write_plot(table, PlotKind::kKCurve, command.output_dir / "k_curve.svg");
  std::cout << "wrote " << (command.output_dir / "k_curve.csv").string()
            << " and k_curve.svg\n";
  return 0;
}

int do_report(const CliCommand& command) {
  const std::filesystem::path input =
      command.report_input.value_or(command.output_dir / "sweep.csv");
  const std::vector<ResultRow> rows = read_results_csv(input);
  const ResultRow* infogain_ref = nullptr;
  for (const ResultRow& row : rows) {
    if (row.method == method_name(MethodKind::kSwissInfogain) &&
        row.budget_requested == 0) {
      infogain_ref = &row;
    }
  }
  if (infogain_ref == nullptr) {
    std::cout << "no swiss_infogain reference row in " << input.string()
              << "; nothing to report\n";
    return 0;
  }
  std::cout << "swiss_infogain reference: r=" << infogain_ref->r_mean
            << " at mean M=" << infogain_ref->m_actual_mean << "\n";
  const auto crossover = crossover_report(
      rows, method_name(MethodKind::kBradleyTerry), infogain_ref->r_mean);
  if (crossover) {
    std::cout << "bradley_terry first exceeds it at budget " << *crossover
              << "\n";
  } else {
    std::cout << "bradley_terry never exceeds it within the sweep\n";
  }
  for (const ResultRow& row : rows) {
    if (row.method == method_name(MethodKind::kBordaCopeland)) {
      std::cout << "borda_copeland at " << row.budget_requested
                << ": r=" << row.r_mean
                << (row.r_mean > infogain_ref->r_mean ? " (above" : " (below")
                << " the reference)\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const CliCommand& command) {
  try {
    switch (command.subcommand) {
      case CliCommand::Kind::kRun: return do_run(command);
      case CliCommand::Kind::kSweep: return do_sweep(command);
      case CliCommand::Kind::kCurves: return do_curves(command);
      case CliCommand::Kind::kKCurve: return do_k_curve(command);
      case CliCommand::Kind::kReport: return do_report(command);
    }
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace prefarena
