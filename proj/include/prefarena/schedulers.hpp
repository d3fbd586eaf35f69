// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#ifndef PREFARENA_SCHEDULERS_HPP
#define PREFARENA_SCHEDULERS_HPP

#include "prefarena/rng.hpp"
#include "prefarena/types.hpp"

#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace prefarena {

// One round of matches. No item appears in more than one pair or bye.
struct Pairing {
  std::vector<std::pair<ItemId, ItemId>> pairs;
  std::vector<ItemId> byes;

  bool empty() const { return pairs.empty(); }
};

// Set of unordered item pairs that have already been compared.
class PairHistory {
 public:
  bool contains(ItemId a, ItemId b) const {
    return played_.count(key(a, b)) != 0;
  }
  void insert(ItemId a, ItemId b) { played_.insert(key(a, b)); }
  std::size_t size() const { return played_.size(); }

 private:
  static std::uint64_t key(ItemId a, ItemId b) {
    const std::uint64_t lo = static_cast<std::uint32_t>(a < b ? a : b);
    const std::uint64_t hi = static_cast<std::uint32_t>(a < b ? b : a);
    return (lo << 32) | hi;
  }
  std::unordered_set<std::uint64_t> played_;
};

// Uniformly random perfect matching: shuffle, then pair adjacent entries.
// floor(N/2) pairs; one bye if N is odd. Throws ConfigError for < 2 items.
Pairing random_pairing(std::span<const ItemId> items, RngStream& rng);

// Circle-method round robin: every unordered pair appears exactly once across
// the schedule. N-1 rounds of N/2 pairs for even N; odd N adds a bye per round.
std::vector<Pairing> copeland_schedule(int n_items);

// Swiss pairing keyed on the current rating. Items are shuffled, stably
// sorted by rating descending (so equal ratings stay in random order), and
// paired greedily with the nearest following item they have not met yet.
// Returns an empty Pairing when no unplayed pair of equal-rated items exists,
// which is the tournament's termination signal.
Pairing swiss_pairing(const RatingTable& table, const PairHistory& history,
                      RngStream& rng);

// Entropy of a Bernoulli(p) draw in nats, with 0*log(0) = 0. Diagnostic only;
// the pairing rule uses the Taylor surrogate info_gain below.
double bernoulli_entropy(double p);

// Second-order surrogate of comparison informativeness: p * (1 - p).
double info_gain(double p);

// Information-gain pairing: every unplayed unordered pair is weighted by
// info_gain(win_probability) on the current ratings; pairs below ig_epsilon
// are discarded; the rest are shuffled, stably sorted by weight descending
// and matched greedily so each item plays at most once. Returns an empty
// Pairing when no eligible pair remains.
Pairing infogain_pairing(const RatingTable& table, const PairHistory& history,
                         const OracleConfig& cfg, double ig_epsilon,
                         RngStream& rng);

}  // namespace prefarena

#endif  // PREFARENA_SCHEDULERS_HPP
