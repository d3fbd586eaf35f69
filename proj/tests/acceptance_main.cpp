// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// End-to-end acceptance suite. Runs the reference experiments at full scale
// (N=100, 100 seeds) and prints one PASS/FAIL line per criterion. The exit
// code is the number of failed criteria.

#include "prefarena/experiments.hpp"
#include "prefarena/io.hpp"
#include "prefarena/metrics.hpp"
#include "prefarena/oracle.hpp"
#include "prefarena/rating.hpp"
#include "prefarena/schedulers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

using namespace prefarena;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

double mean_r(const std::vector<CellResult>& cells) {
  double sum = 0.0;
  for (const CellResult& c : cells) sum += c.r;
  return sum / cells.size();
}

double mean_m(const std::vector<CellResult>& cells) {
  double sum = 0.0;
  for (const CellResult& c : cells) sum += static_cast<double>(c.m);
  return sum / cells.size();
}

AggregateStat aggregate_r(const std::vector<CellResult>& cells) {
  std::vector<double> rs;
  rs.reserve(cells.size());
  for (const CellResult& c : cells) rs.push_back(c.r);
  return aggregate(rs);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Exhaustive maximum over all matchings of <= 6 items; -1 marks a forbidden
// pair.
double best_matching(const std::vector<std::vector<double>>& w,
                     std::vector<char>& used) {
  const int n = static_cast<int>(w.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[i]) {
      first = i;
      break;
    }
  }
  if (first < 0) return 0.0;
  used[first] = 1;
  double best = best_matching(w, used);
  for (int j = first + 1; j < n; ++j) {
    if (used[j] || w[first][j] < 0.0) continue;
    used[j] = 1;
    best = std::max(best, w[first][j] + best_matching(w, used));
    used[j] = 0;
  }
  used[first] = 0;
  return best;
}

}  // namespace

int main() {
  const auto suite_start = std::chrono::steady_clock::now();
  ExperimentConfig cfg = default_experiment_config();
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());

  // ---- fixed-budget cells (criteria 1-4) --------------------------------
  std::map<MethodKind, std::vector<CellResult>> cells;
  const auto copeland_start = std::chrono::steady_clock::now();
  for (MethodKind kind :
       {MethodKind::kBordaCopeland, MethodKind::kEloCopeland}) {
    cells[kind] = run_cells(cfg, make_spec(cfg, kind, fixed_budget_for(cfg, kind)));
  }
  const double copeland_seconds = elapsed_seconds(copeland_start);
  for (MethodKind kind :
       {MethodKind::kBradleyTerry, MethodKind::kBordaRnd, MethodKind::kEloRnd,
        MethodKind::kSwiss, MethodKind::kRndSwiss,
        MethodKind::kSwissInfogain}) {
    cells[kind] = run_cells(cfg, make_spec(cfg, kind, fixed_budget_for(cfg, kind)));
  }

  // Criterion 1: Copeland ceiling at 4950 comparisons.
  {
    const double borda = mean_r(cells[MethodKind::kBordaCopeland]);
    const double elo = mean_r(cells[MethodKind::kEloCopeland]);
    const bool in_band = borda >= 0.93 && borda <= 0.99 && elo >= 0.93 &&
                         elo <= 0.99;
    const bool fast = copeland_seconds < 300.0;
    report(1, in_band && fast,
           "copeland mean r at 4950 pairs: borda=" + fmt(borda) +
               ", elo=" + fmt(elo) + " (target 0.96 +/- 0.03), ran in " +
               fmt(copeland_seconds, 1) + "s");
  }

  // Criterion 2: low-budget ordering with a significant InfoGain-BT gap.
  {
    const double ig = mean_r(cells[MethodKind::kSwissInfogain]);
    const double swiss = mean_r(cells[MethodKind::kSwiss]);
    const double bt = mean_r(cells[MethodKind::kBradleyTerry]);
    const double borda = mean_r(cells[MethodKind::kBordaRnd]);
    const double elo = mean_r(cells[MethodKind::kEloRnd]);
    const double rnd_swiss = mean_r(cells[MethodKind::kRndSwiss]);
    const bool ordered = ig > swiss && swiss > bt && bt > borda && bt > elo &&
                         bt > rnd_swiss;

    std::vector<double> diffs;
    for (int s = 0; s < cfg.n_seeds; ++s)
      diffs.push_back(cells[MethodKind::kSwissInfogain][s].r -
                      cells[MethodKind::kBradleyTerry][s].r);
    const AggregateStat paired = aggregate(diffs);
    const AggregateStat ig_stat = aggregate_r(cells[MethodKind::kSwissInfogain]);
    const AggregateStat bt_stat = aggregate_r(cells[MethodKind::kBradleyTerry]);
    const bool significant =
        paired.ci_low > 0.0 || ig_stat.ci_low > bt_stat.ci_high;
    report(2, ordered && significant,
           "ordering ig=" + fmt(ig) + " > swiss=" + fmt(swiss) + " > bt=" +
               fmt(bt) + " > {borda=" + fmt(borda) + ", elo=" + fmt(elo) +
               ", rnd_swiss=" + fmt(rnd_swiss) + "}; paired ig-bt CI [" +
               fmt(paired.ci_low) + ", " + fmt(paired.ci_high) + "]");
  }

  // Criterion 3: Swiss natural budget.
  {
    const double m = mean_m(cells[MethodKind::kSwiss]);
    report(3, m >= 400.0 && m <= 600.0,
           "swiss mean M = " + fmt(m, 1) + " (target [400, 600])");
  }

  // Criterion 4: InfoGain efficiency.
  {
    const double m = mean_m(cells[MethodKind::kSwissInfogain]);
    report(4, m < 2500.0,
           "swiss_infogain mean M = " + fmt(m, 1) + " (target < 2500)");
  }

  // Criterion 5: crossover intervals on the default sweep.
  {
    const std::vector<ResultRow> rows = budget_sweep(cfg);
    double ig_ref = 0.0;
    double bc_19800 = 0.0;
    for (const ResultRow& row : rows) {
      if (row.method == "swiss_infogain" && row.budget_requested == 0)
        ig_ref = row.r_mean;
      if (row.method == "borda_copeland" && row.budget_requested == 19800)
        bc_19800 = row.r_mean;
    }
    const auto crossover = crossover_report(rows, "bradley_terry", ig_ref);
    const bool interval_ok =
        !crossover.has_value() || (*crossover >= 10000 && *crossover <= 20000);
    const bool copeland_ok = bc_19800 > ig_ref;
    const std::string crossover_text =
        crossover ? std::to_string(*crossover) : std::string("absent");
    report(5, interval_ok && copeland_ok,
           "bt-vs-infogain crossover at budget " + crossover_text +
               " (target [10000, 20000] or absent); infogain ref r=" +
               fmt(ig_ref) + "; borda_copeland@19800 r=" + fmt(bc_19800));
  }

  // Criterion 6: oracle properties on a 10^4 grid.
  {
    OracleConfig ten = cfg.oracle;
    ten.elo_base = EloBase::kTen;
    RngStream rng(20240817);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double a = rng.normal(1000, 250);
      const double b = rng.normal(1000, 250);
      const OutcomeDistribution d = outcome_distribution(a, b, ten);
      worst = std::max(worst,
                       std::abs(d.p_a_wins + d.p_tie + d.p_b_wins - 1.0));
    }
    const bool sums_ok = worst < 1e-12;
    const bool tie_ok = tie_probability(1234.5, 1234.5, ten) == 1.0 / 3.0;
    const double p400 = win_probability(1400, 1000, ten);
    const bool win_ok = std::abs(p400 - 0.909) < 0.01;
    report(6, sums_ok && tie_ok && win_ok,
           "max |sum-1| = " + fmt(worst, 16) + "; tie(0) == 1/3: " +
               (tie_ok ? "yes" : "no") + "; win(+400, base ten) = " +
               fmt(p400));
  }

  // Criterion 7: BT gradient vs central finite differences.
  {
    RngStream rng(7321);
    double worst_rel = 0.0;
    for (int instance = 0; instance < 20; ++instance) {
      const int n = 10;
      Eigen::VectorXd f(n);
      for (int i = 0; i < n; ++i) f[i] = rng.normal(0.0, 1.0);
      std::vector<MatchRecord> records;
      for (int m = 0; m < 80; ++m) {
        const ItemId a = static_cast<ItemId>(rng.uniform_below(n));
        ItemId b = static_cast<ItemId>(rng.uniform_below(n - 1));
        if (b >= a) ++b;
        records.push_back(
            {a, b, static_cast<Outcome>(rng.uniform_below(3)), m});
      }
      const Eigen::VectorXd grad = bt_gradient(f, n, records);
      const double h = 1e-5;
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd hi = f, lo = f;
        hi[i] += h;
        lo[i] -= h;
        const double fd = (bt_log_likelihood(hi, records) -
                           bt_log_likelihood(lo, records)) /
                          (2 * h);
        const double scale = std::max({std::abs(fd), std::abs(grad[i]), 1e-8});
        worst_rel = std::max(worst_rel, std::abs(grad[i] - fd) / scale);
      }
    }
    report(7, worst_rel < 1e-4,
           "worst relative gradient error over 20 instances = " +
               fmt(worst_rel, 8) + " (target < 1e-4)");
  }

  // Criterion 8: scheduler oracle-equivalence on small instances.
  {
    bool copeland_ok = true;
    for (int n : {4, 6, 8, 10}) {
      std::set<std::pair<int, int>> seen;
      for (const Pairing& round : copeland_schedule(n)) {
        for (const auto& [a, b] : round.pairs)
          if (!seen.insert(std::minmax<int>(a, b)).second) copeland_ok = false;
      }
      std::set<std::pair<int, int>> expected;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) expected.insert({a, b});
      if (seen != expected) copeland_ok = false;
    }

    RngStream rng(8421);
    OracleConfig ten = cfg.oracle;
    ten.elo_base = EloBase::kTen;
    int tested = 0;
    bool greedy_ok = true;
    while (tested < 300) {
      const int n = 2 + static_cast<int>(rng.uniform_below(5));
      RatingTable table(n);
      for (int i = 0; i < n; ++i) table.ratings[i] = rng.normal(1000, 150);
      std::vector<std::vector<double>> weights(n,
                                               std::vector<double>(n, -1.0));
      std::set<double> distinct;
      double top = -1.0;
      std::pair<ItemId, ItemId> top_pair{0, 0};
      for (ItemId a = 0; a < n; ++a) {
        for (ItemId b = a + 1; b < n; ++b) {
          const double ig = info_gain(
              win_probability(table.ratings[a], table.ratings[b], ten));
          weights[a][b] = weights[b][a] = ig;
          distinct.insert(ig);
          if (ig > top) {
            top = ig;
            top_pair = {a, b};
          }
        }
      }
      if (distinct.size() != static_cast<std::size_t>(n * (n - 1) / 2))
        continue;
      ++tested;
      PairHistory history;
      const Pairing pairing = infogain_pairing(table, history, ten, 0.0, rng);
      bool top_selected = false;
      double total = 0.0;
      for (const auto& [a, b] : pairing.pairs) {
        total += weights[a][b];
        if (std::minmax(a, b) == std::minmax(top_pair.first, top_pair.second))
          top_selected = true;
      }
      std::vector<char> used(n, 0);
      if (!top_selected || total < 0.5 * best_matching(weights, used) - 1e-12)
        greedy_ok = false;
    }
    report(8, copeland_ok && greedy_ok,
           std::string("copeland covers all pairs exactly once: ") +
               (copeland_ok ? "yes" : "no") +
               "; infogain greedy picks the top pair on 300 instances: " +
               (greedy_ok ? "yes" : "no"));
  }

  // Criterion 9: byte-identical sweep under different worker counts.
  {
    const fs::path base =
        fs::temp_directory_path() / "prefarena_acceptance_c9";
    std::error_code ec;
    fs::remove_all(base, ec);
    auto run_once = [&](int workers, const std::string& name) {
      CliCommand command;
      command.subcommand = CliCommand::Kind::kSweep;
      command.output_dir = base / name;
      command.workers = workers;
      command.seed = 42;
      command.overrides = {"n_seeds=3"};
      return run_cli(command);
    };
    const int rc1 = run_once(1, "w1");
    const int rc4 = run_once(4, "w4");
    std::string bytes1, bytes4;
    for (auto* pair : {&bytes1, &bytes4}) (void)pair;
    {
      std::ifstream in1(base / "w1" / "sweep.csv", std::ios::binary);
      std::stringstream ss1;
      ss1 << in1.rdbuf();
      bytes1 = ss1.str();
      std::ifstream in4(base / "w4" / "sweep.csv", std::ios::binary);
      std::stringstream ss4;
      ss4 << in4.rdbuf();
      bytes4 = ss4.str();
    }
    const bool ok =
        rc1 == 0 && rc4 == 0 && !bytes1.empty() && bytes1 == bytes4;
    report(9, ok,
           "sweep n_seeds=3 with workers 1 vs 4: exit codes " +
               std::to_string(rc1) + "/" + std::to_string(rc4) +
               ", byte-identical: " + (bytes1 == bytes4 ? "yes" : "no"));
    fs::remove_all(base, ec);
  }

  // Criterion 10: reduction identities.
  {
    bool ok = true;
    OracleConfig oracle = cfg.oracle;
    for (int n : {10, 100}) {
      for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        RngStream pop_rng(seed);
        const LatentPopulation pop = sample_population(n, 1000, 200, pop_rng);
        {
          RngStream a(seed + 100), b(seed + 100);
          const SimulationResult swiss =
              run_swiss(pop, cfg.swiss_r_max, cfg.elo, oracle, a);
          const SimulationResult reduced =
              run_rnd_swiss(pop, 0, cfg.swiss_r_max, cfg.elo, oracle, b);
          if (!(swiss.records == reduced.records &&
                swiss.estimated == reduced.estimated))
            ok = false;
        }
        {
          RngStream a(seed + 200), b(seed + 200);
          const SimulationResult elo =
              run_elo(pop, 7, Sampling::kRnd, cfg.elo, oracle, a);
          const SimulationResult reduced =
              run_rnd_swiss(pop, 7, 0, cfg.elo, oracle, b);
          if (!(elo.records == reduced.records &&
                elo.estimated == reduced.estimated))
            ok = false;
        }
      }
    }
    report(10, ok,
           std::string("rnd_swiss(0,r) == swiss and rnd_swiss(r,0) == "
                       "elo_rnd, trace-equal on N in {10, 100}: ") +
               (ok ? "yes" : "no"));
  }

  std::printf("%d of 10 criteria passed in %.1fs\n", 10 - g_failures,
              elapsed_seconds(suite_start));
  return g_failures;
}
