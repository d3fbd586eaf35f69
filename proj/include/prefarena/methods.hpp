// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// The eight end-to-end methods. Each takes a latent population, spends its
// comparison budget through the oracle, and returns estimated values plus the
// exact number of comparisons made. Elo-based methods report raw ratings
// (correlation is affine-invariant); the others rescale to the 1000/200
// reporting scale.

#ifndef PREFARENA_METHODS_HPP
#define PREFARENA_METHODS_HPP

#include "prefarena/oracle.hpp"
#include "prefarena/rng.hpp"
#include "prefarena/types.hpp"

#include <cstdint>
#include <vector>

namespace prefarena {

struct SimulationResult {
  MethodKind method = MethodKind::kBradleyTerry;
  Eigen::VectorXd estimated;
  long m_comparisons = 0;
  int rounds_run = 0;
  std::vector<MatchRecord> records;
  std::uint64_t seed = 0;
};

enum class Sampling { kRnd, kCopeland };

// Alg.-style Bradley-Terry estimator: round(c*N/2) independent random pairs
// (a != b, repeats across draws allowed), gradient-descent fit, rescale.
SimulationResult run_bradley_terry(const LatentPopulation& pop,
                                   double redundancy_c, const BtFitConfig& fit,
                                   const OracleConfig& oracle_cfg,
                                   RngStream& rng);

// Borda count. RND: rounds_r random matchings (floor(N/2) pairs each).
// COPELAND: rounds_r full round robins (N(N-1)/2 pairs each). Wins accumulate
// 1 / 0.5 / 0 and are rescaled at the end.
SimulationResult run_borda(const LatentPopulation& pop, int rounds_r,
                           Sampling sampling, const OracleConfig& oracle_cfg,
                           RngStream& rng);

// Batch Elo from initial rating 1000. Expected scores come from the pre-round
// ratings; one batch update per matching round (per schedule round for
// COPELAND robins).
SimulationResult run_elo(const LatentPopulation& pop, int rounds_r,
                         Sampling sampling, const EloConfig& elo_cfg,
                         const OracleConfig& oracle_cfg, RngStream& rng);

// Pure Swiss tournament: swiss_pairing rounds with batch Elo updates until
// the pairing comes back empty or r_max rounds were played.
SimulationResult run_swiss(const LatentPopulation& pop, int r_max,
                           const EloConfig& elo_cfg,
                           const OracleConfig& oracle_cfg, RngStream& rng);

// r_rnd random-matching Elo rounds followed by at most r_swiss Swiss rounds.
// r_rnd = 0 reproduces run_swiss(r_max = r_swiss); r_swiss = 0 reproduces
// run_elo(RND, r_rnd), trace-for-trace under a shared stream.
SimulationResult run_rnd_swiss(const LatentPopulation& pop, int r_rnd,
                               int r_swiss, const EloConfig& elo_cfg,
                               const OracleConfig& oracle_cfg, RngStream& rng);

// Swiss tournament with information-gain pairing: round one is a uniform
// random matching, later rounds use infogain_pairing; the K factor follows
// elo_cfg (DECAY schedule by default); no pair is ever played twice.
SimulationResult run_swiss_infogain(const LatentPopulation& pop, int r_max,
                                    const EloConfig& elo_cfg,
                                    double ig_epsilon,
                                    const OracleConfig& oracle_cfg,
                                    RngStream& rng);

// Dispatch over the eight kinds. The method's private stream is derived as
// RngStream(seed).child(method_stream_tag(spec)), so distinct methods (and
// distinct budget parameters) never share draws.
SimulationResult run_method(const MethodSpec& spec, const LatentPopulation& pop,
                            const OracleConfig& oracle_cfg, std::uint64_t seed);

std::uint64_t method_stream_tag(const MethodSpec& spec);

// Converts a target comparison budget into per-kind parameters:
//   BRADLEY_TERRY   c = 2*M/N
//   BORDA/ELO RND   rounds = round(M / floor(N/2))
//   *_COPELAND      rounds = round(M / (N(N-1)/2)) full robins
//   RND_SWISS       total = round(M / floor(N/2)); r_rnd = total/2, rest swiss
//   SWISS, SWISS_INFOGAIN: budget ignored (they stop on their own; r_max and
//   ig_epsilon are taken from `base`).
MethodSpec calibrated_spec(const MethodSpec& base, int budget, int n_items);

}  // namespace prefarena

#endif  // PREFARENA_METHODS_HPP
