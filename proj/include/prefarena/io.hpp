// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// Configuration parsing, CSV emission and SVG plot generation.
//
// Config grammar (flat key-value):
//   - one `key = value` per line; `#` starts a comment; blank lines ignored
//   - lists are comma-separated (`sweep_budgets = 500,1000,1500`)
//   - overrides are `key=value` strings applied after the file, winning over
//     file values
// Unknown keys, type mismatches and unreadable files raise ConfigError with
// the offending key and line number.

#ifndef PREFARENA_IO_HPP
#define PREFARENA_IO_HPP

#include "prefarena/experiments.hpp"
#include "prefarena/types.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prefarena {

// Recognized keys: n_items, n_seeds, base_seed, budget, sweep_budgets,
// copeland_budgets, methods, elo_base, elo_scale, tie_coefficient, tie_sigma,
// k_fixed, ig_k0, ig_k_min, bt_epochs, bt_learning_rate, ig_epsilon,
// swiss_r_max, infogain_r_max, curve_delta_max, curve_delta_step.
ExperimentConfig parse_config(const std::filesystem::path& path,
                              std::span<const std::string> overrides);

// Applies one `key=value` override in place. `where` names the source for
// error messages (e.g. "override 2" or "config.txt:14").
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value, const std::string& where);

// Header: method,budget,m_mean,r_mean,r_ci_low,r_ci_high,n_seeds. Reals are
// written with six decimal places; rows are sorted by (method, budget).
void write_results_csv(std::span<const ResultRow> rows,
                       const std::filesystem::path& path);

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

void write_curve_csv(const CurveTable& table,
                     const std::filesystem::path& path);

enum class PlotKind { kCorrelationBars, kSweepBands, kOutcomeCurve, kKCurve };

// Emits a self-contained SVG with axes and a legend; SWEEP_BANDS shades the
// confidence band of every swept method and marks Copeland budgets with
// points. The sibling CSV (same basename, .csv) is written alongside so every
// plot is re-derivable. Throws std::invalid_argument on empty input.
void write_plot(std::span<const ResultRow> rows, PlotKind kind,
                const std::filesystem::path& path);
void write_plot(const CurveTable& table, PlotKind kind,
                const std::filesystem::path& path);

struct CliCommand {
  enum class Kind { kRun, kSweep, kCurves, kKCurve, kReport };

  Kind subcommand = Kind::kRun;
  std::optional<std::filesystem::path> config_path;
  std::vector<std::string> overrides;
  std::filesystem::path output_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::filesystem::path> report_input;
};

// Executes one CLI command. Returns the process exit code: 0 success,
// 1 configuration error, 2 I/O error, 3 internal invariant violation.
int run_cli(const CliCommand& command);

}  // namespace prefarena

#endif  // PREFARENA_IO_HPP
