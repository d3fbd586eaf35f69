// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// prefarena <run|sweep|curves|k-curve|report>
//     [--config PATH] [--override k=v ...] [--out DIR] [--seed S]
//     [--workers W] [--input FILE]
//
//   run      fixed-budget comparison of the configured methods
//            -> results.csv, results.svg
//   sweep    budget sweep -> sweep.csv, sweep.svg
//   curves   oracle outcome probabilities vs value difference
//            -> outcome_curve.csv/.svg
//   k-curve  Elo change vs rating difference for K in {10,20,32,40}
//            -> k_curve.csv/.svg
//   report   crossover summary computed from an existing sweep.csv

#include "prefarena/io.hpp"

#include <CLI11.hpp>

#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Pair-sampling strategies for preference inference under "
               "constrained annotation budgets"};
  app.require_subcommand(1);

  prefarena::CliCommand command;
  std::string config_path;
  std::string input_path;
  std::uint64_t seed = 0;
  int workers = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key=value config file");
    sub->add_option("--override", command.overrides,
                    "config override key=value (repeatable)");
    sub->add_option("--out", command.output_dir, "output directory");
    sub->add_option("--seed", seed, "base seed");
    sub->add_option("--workers", workers, "worker thread count");
  };

  CLI::App* run = app.add_subcommand("run", "fixed-budget experiment");
  CLI::App* sweep = app.add_subcommand("sweep", "budget sweep experiment");
  CLI::App* curves = app.add_subcommand("curves", "oracle outcome curves");
  CLI::App* k_curve = app.add_subcommand("k-curve", "Elo K-factor curves");
  CLI::App* report = app.add_subcommand("report", "crossover report");
  for (CLI::App* sub : {run, sweep, curves, k_curve, report}) add_common(sub);
  report->add_option("--input", input_path, "sweep.csv to analyze");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (run->parsed()) command.subcommand = prefarena::CliCommand::Kind::kRun;
  if (sweep->parsed()) command.subcommand = prefarena::CliCommand::Kind::kSweep;
  if (curves->parsed()) command.subcommand = prefarena::CliCommand::Kind::kCurves;
  if (k_curve->parsed()) command.subcommand = prefarena::CliCommand::Kind::kKCurve;
  if (report->parsed()) command.subcommand = prefarena::CliCommand::Kind::kReport;

  CLI::App* active = app.get_subcommands().front();
  if (active->count("--config") > 0) command.config_path = config_path;
  if (active->count("--seed") > 0) command.seed = seed;
  if (active->count("--workers") > 0) command.workers = workers;
  if (report->parsed() && report->count("--input") > 0)
    command.report_input = input_path;

  return prefarena::run_cli(command);
}
