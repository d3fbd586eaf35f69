// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/methods.hpp"

#include "prefarena/rating.hpp"
#include "prefarena/schedulers.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace prefarena {

namespace {

// Wraps the oracle so every comparison is counted and recorded exactly once.
class Annotator {
 public:
  Annotator(const LatentPopulation& pop, const OracleConfig& cfg,
            RngStream& rng)
      : pop_(pop), cfg_(cfg), rng_(rng) {}

  Outcome annotate(ItemId a, ItemId b, int round) {
    const Outcome outcome =
        sample_outcome(pop_.values[a], pop_.values[b], cfg_, rng_);
    records_.push_back({a, b, outcome, round});
    ++calls_;
    return outcome;
  }

  // Annotates a whole round and returns the records it produced.
  std::span<const MatchRecord> play(const Pairing& pairing, int round) {
    const std::size_t first = records_.size();
    for (const auto& [a, b] : pairing.pairs) annotate(a, b, round);
    return std::span<const MatchRecord>(records_).subspan(first);
  }

  const std::vector<MatchRecord>& records() const { return records_; }
  std::vector<MatchRecord> take_records() { return std::move(records_); }
  long calls() const { return calls_; }
  RngStream& rng() { return rng_; }

 private:
  const LatentPopulation& pop_;
  OracleConfig cfg_;
  RngStream& rng_;
  std::vector<MatchRecord> records_;
  long calls_ = 0;
};

std::vector<ItemId> all_items(int n) {
  std::vector<ItemId> items(n);
  std::iota(items.begin(), items.end(), 0);
  return items;
}

// One annotated matching round followed by a batch Elo update. Expected
// scores are taken from the pre-round ratings.
void play_elo_round(Annotator& annotator, RatingTable& table,
                    const Pairing& pairing, const EloConfig& elo_cfg,
                    const OracleConfig& oracle_cfg, int round,
                    PairHistory* history) {
  const Eigen::VectorXd expected =
      expected_scores(table.ratings, pairing.pairs, oracle_cfg);
  const auto round_records = annotator.play(pairing, round);
  if (history != nullptr) {
    for (const auto& [a, b] : pairing.pairs) history->insert(a, b);
  }
  batch_elo_update(table, round_records, expected, elo_cfg);
}

int random_elo_rounds(Annotator& annotator, RatingTable& table, int rounds,
                      const EloConfig& elo_cfg, const OracleConfig& oracle_cfg,
                      PairHistory* history, int round_base) {
  const std::vector<ItemId> items = all_items(table.size());
  for (int r = 0; r < rounds; ++r) {
    const Pairing pairing = random_pairing(items, annotator.rng());
    play_elo_round(annotator, table, pairing, elo_cfg, oracle_cfg,
                   round_base + r, history);
  }
  return round_base + rounds;
}

int swiss_elo_rounds(Annotator& annotator, RatingTable& table, int max_rounds,
                     const EloConfig& elo_cfg, const OracleConfig& oracle_cfg,
                     PairHistory& history, int round_base) {
  int round = round_base;
  for (int r = 0; r < max_rounds; ++r) {
    const Pairing pairing = swiss_pairing(table, history, annotator.rng());
    if (pairing.empty()) break;
    play_elo_round(annotator, table, pairing, elo_cfg, oracle_cfg, round,
                   &history);
    ++round;
  }
  return round;
}

SimulationResult finish(MethodKind kind, Annotator& annotator,
                        Eigen::VectorXd estimated, int rounds_run,
                        std::uint64_t seed) {
  SimulationResult result;
  result.method = kind;
  result.estimated = std::move(estimated);
  result.m_comparisons = annotator.calls();
  result.rounds_run = rounds_run;
  result.records = annotator.take_records();
  result.seed = seed;
  if (result.m_comparisons != static_cast<long>(result.records.size()))
    throw IntegrityError("comparison count does not match record count");
  return result;
}

}  // namespace

SimulationResult run_bradley_terry(const LatentPopulation& pop,
                                   double redundancy_c, const BtFitConfig& fit,
                                   const OracleConfig& oracle_cfg,
                                   RngStream& rng) {
  if (redundancy_c < 0.0) throw ConfigError("redundancy_c must be >= 0");
  const int n = pop.n_items;
  const long budget = std::lround(redundancy_c * n / 2.0);
  Annotator annotator(pop, oracle_cfg, rng);
  for (long i = 0; i < budget; ++i) {
    const ItemId a = static_cast<ItemId>(rng.uniform_below(n));
    ItemId b = static_cast<ItemId>(rng.uniform_below(n - 1));
    if (b >= a) ++b;
    annotator.annotate(a, b, 0);
  }
  const Eigen::VectorXd scores =
      fit_bradley_terry(annotator.records(), n, fit);
  return finish(MethodKind::kBradleyTerry, annotator, rescale(scores),
                budget > 0 ? 1 : 0, rng.seed());
}

SimulationResult run_borda(const LatentPopulation& pop, int rounds_r,
                           Sampling sampling, const OracleConfig& oracle_cfg,
                           RngStream& rng) {
  if (rounds_r < 0) throw ConfigError("rounds_r must be >= 0");
  const int n = pop.n_items;
  Annotator annotator(pop, oracle_cfg, rng);
  Eigen::VectorXd wins = Eigen::VectorXd::Zero(n);
  int round = 0;
  auto tally = [&](const Pairing& pairing) {
    for (const MatchRecord& record : annotator.play(pairing, round)) {
      const auto [s_a, s_b] = score_pair(record.outcome);
      wins[record.a] += s_a;
      wins[record.b] += s_b;
    }
    ++round;
  };
  if (sampling == Sampling::kRnd) {
    const std::vector<ItemId> items = all_items(n);
    for (int r = 0; r < rounds_r; ++r) tally(random_pairing(items, rng));
  } else {
    const std::vector<Pairing> schedule = copeland_schedule(n);
    for (int robin = 0; robin < rounds_r; ++robin)
      for (const Pairing& pairing : schedule) tally(pairing);
  }
  return finish(sampling == Sampling::kRnd ? MethodKind::kBordaRnd
                                           : MethodKind::kBordaCopeland,
                annotator, rescale(wins), round, rng.seed());
}

SimulationResult run_elo(const LatentPopulation& pop, int rounds_r,
                         Sampling sampling, const EloConfig& elo_cfg,
                         const OracleConfig& oracle_cfg, RngStream& rng) {
  if (rounds_r < 0) throw ConfigError("rounds_r must be >= 0");
  const int n = pop.n_items;
  Annotator annotator(pop, oracle_cfg, rng);
  RatingTable table(n);
  int rounds_run = 0;
  if (sampling == Sampling::kRnd) {
    rounds_run = random_elo_rounds(annotator, table, rounds_r, elo_cfg,
                                   oracle_cfg, nullptr, 0);
  } else {
    const std::vector<Pairing> schedule = copeland_schedule(n);
    for (int robin = 0; robin < rounds_r; ++robin) {
      for (const Pairing& pairing : schedule) {
        play_elo_round(annotator, table, pairing, elo_cfg, oracle_cfg,
                       rounds_run, nullptr);
        ++rounds_run;
      }
    }
  }
  return finish(sampling == Sampling::kRnd ? MethodKind::kEloRnd
                                           : MethodKind::kEloCopeland,
                annotator, table.ratings, rounds_run, rng.seed());
}

SimulationResult run_rnd_swiss(const LatentPopulation& pop, int r_rnd,
                               int r_swiss, const EloConfig& elo_cfg,
                               const OracleConfig& oracle_cfg,
                               RngStream& rng) {
  if (r_rnd < 0 || r_swiss < 0) throw ConfigError("round counts must be >= 0");
  Annotator annotator(pop, oracle_cfg, rng);
  RatingTable table(pop.n_items);
  PairHistory history;
  int round = random_elo_rounds(annotator, table, r_rnd, elo_cfg, oracle_cfg,
                                &history, 0);
  round = swiss_elo_rounds(annotator, table, r_swiss, elo_cfg, oracle_cfg,
                           history, round);
  return finish(MethodKind::kRndSwiss, annotator, table.ratings, round,
                rng.seed());
}

SimulationResult run_swiss(const LatentPopulation& pop, int r_max,
                           const EloConfig& elo_cfg,
                           const OracleConfig& oracle_cfg, RngStream& rng) {
  SimulationResult result =
      run_rnd_swiss(pop, 0, r_max, elo_cfg, oracle_cfg, rng);
  result.method = MethodKind::kSwiss;
  return result;
}

SimulationResult run_swiss_infogain(const LatentPopulation& pop, int r_max,
                                    const EloConfig& elo_cfg,
                                    double ig_epsilon,
                                    const OracleConfig& oracle_cfg,
                                    RngStream& rng) {
  if (r_max < 1) throw ConfigError("r_max must be >= 1");
  Annotator annotator(pop, oracle_cfg, rng);
  RatingTable table(pop.n_items);
  PairHistory history;
  // Round one: ratings are all equal, so every pair is equally informative
  // and the matching is purely random.
  const Pairing first = random_pairing(all_items(pop.n_items), rng);
  play_elo_round(annotator, table, first, elo_cfg, oracle_cfg, 0, &history);
  int round = 1;
  while (round < r_max) {
    const Pairing pairing =
        infogain_pairing(table, history, oracle_cfg, ig_epsilon, rng);
    if (pairing.empty()) break;
    play_elo_round(annotator, table, pairing, elo_cfg, oracle_cfg, round,
                   &history);
    ++round;
  }
  return finish(MethodKind::kSwissInfogain, annotator, table.ratings, round,
                rng.seed());
}

std::uint64_t method_stream_tag(const MethodSpec& spec) {
  auto bits = [](double x) { return std::bit_cast<std::uint64_t>(x); };
  std::uint64_t tag = static_cast<std::uint64_t>(spec.kind) + 1;
  tag = RngStream::mix64(tag, bits(spec.redundancy_c));
  tag = RngStream::mix64(tag, static_cast<std::uint64_t>(spec.rounds));
  tag = RngStream::mix64(tag, static_cast<std::uint64_t>(spec.r_rnd));
  tag = RngStream::mix64(tag, static_cast<std::uint64_t>(spec.r_swiss));
  tag = RngStream::mix64(tag, static_cast<std::uint64_t>(spec.r_max));
  tag = RngStream::mix64(tag, bits(spec.ig_epsilon));
  return tag;
}

SimulationResult run_method(const MethodSpec& spec, const LatentPopulation& pop,
                            const OracleConfig& oracle_cfg,
                            std::uint64_t seed) {
  spec.validate();
  RngStream stream = RngStream(seed).child(method_stream_tag(spec));
  SimulationResult result;
  switch (spec.kind) {
    case MethodKind::kBradleyTerry:
      result = run_bradley_terry(pop, spec.redundancy_c, spec.bt, oracle_cfg,
                                 stream);
      break;
    case MethodKind::kBordaRnd:
      result = run_borda(pop, spec.rounds, Sampling::kRnd, oracle_cfg, stream);
      break;
    case MethodKind::kBordaCopeland:
      result =
          run_borda(pop, spec.rounds, Sampling::kCopeland, oracle_cfg, stream);
      break;
    case MethodKind::kEloRnd:
      result = run_elo(pop, spec.rounds, Sampling::kRnd, spec.elo, oracle_cfg,
                       stream);
      break;
    case MethodKind::kEloCopeland:
      result = run_elo(pop, spec.rounds, Sampling::kCopeland, spec.elo,
                       oracle_cfg, stream);
      break;
    case MethodKind::kSwiss:
      result = run_swiss(pop, spec.r_max, spec.elo, oracle_cfg, stream);
      break;
    case MethodKind::kRndSwiss:
      result = run_rnd_swiss(pop, spec.r_rnd, spec.r_swiss, spec.elo,
                             oracle_cfg, stream);
      break;
    case MethodKind::kSwissInfogain:
      result = run_swiss_infogain(pop, spec.r_max, spec.elo, spec.ig_epsilon,
                                  oracle_cfg, stream);
      break;
  }
  result.seed = seed;
  return result;
}

MethodSpec calibrated_spec(const MethodSpec& base, int budget, int n_items) {
  MethodSpec spec = base;
  const int half = n_items / 2;
  const long robin = static_cast<long>(n_items) * (n_items - 1) / 2;
  switch (spec.kind) {
    case MethodKind::kBradleyTerry:
      spec.redundancy_c = 2.0 * budget / n_items;
      break;
    case MethodKind::kBordaRnd:
    case MethodKind::kEloRnd:
      spec.rounds =
          std::max(1, static_cast<int>(std::lround(double(budget) / half)));
      break;
    case MethodKind::kBordaCopeland:
    case MethodKind::kEloCopeland:
      spec.rounds = std::max(
          1, static_cast<int>(std::lround(double(budget) / double(robin))));
      break;
    case MethodKind::kRndSwiss: {
      const int total =
          std::max(1, static_cast<int>(std::lround(double(budget) / half)));
      spec.r_rnd = total / 2;
      spec.r_swiss = total - spec.r_rnd;
      break;
    }
    case MethodKind::kSwiss:
    case MethodKind::kSwissInfogain:
      break;  // these stop on their own; the budget is not a parameter
  }
  return spec;
}

}  // namespace prefarena
