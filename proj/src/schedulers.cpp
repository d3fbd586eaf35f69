// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/schedulers.hpp"

#include "prefarena/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace prefarena {

Pairing random_pairing(std::span<const ItemId> items, RngStream& rng) {
  if (items.size() < 2) throw ConfigError("random_pairing needs >= 2 items");
  std::vector<ItemId> pool(items.begin(), items.end());
  rng.shuffle(pool);
  Pairing pairing;
  const std::size_t n_pairs = pool.size() / 2;
  pairing.pairs.reserve(n_pairs);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    pairing.pairs.emplace_back(pool[i], pool[i + 1]);
  }
  if (pool.size() % 2 != 0) pairing.byes.push_back(pool.back());
  return pairing;
}

std::vector<Pairing> copeland_schedule(int n_items) {
  if (n_items < 2) throw ConfigError("copeland_schedule needs >= 2 items");
  // Circle method: a dummy slot (= n_items) fills odd fields; its partner
  // takes the bye.
  const int m = (n_items % 2 == 0) ? n_items : n_items + 1;
  std::vector<int> ring(m);
  std::iota(ring.begin(), ring.end(), 0);
  std::vector<Pairing> rounds;
  rounds.reserve(m - 1);
  for (int round = 0; round < m - 1; ++round) {
    Pairing pairing;
    for (int i = 0; i < m / 2; ++i) {
      const int a = ring[i];
      const int b = ring[m - 1 - i];
      if (a >= n_items) {
        pairing.byes.push_back(static_cast<ItemId>(b));
      } else if (b >= n_items) {
        pairing.byes.push_back(static_cast<ItemId>(a));
      } else {
        pairing.pairs.emplace_back(static_cast<ItemId>(a),
                                   static_cast<ItemId>(b));
      }
    }
    // Rotate every position except the first.
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    rounds.push_back(std::move(pairing));
  }
  return rounds;
}

namespace {

// Shuffle then stable-sort descending: equal keys end up in random order.
std::vector<ItemId> order_by_rating(const Eigen::VectorXd& ratings,
                                    RngStream& rng) {
  std::vector<ItemId> order(ratings.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return ratings[a] > ratings[b];
  });
  return order;
}

bool has_unplayed_equal_pair(const RatingTable& table,
                             const PairHistory& history) {
  const int n = table.size();
  std::vector<ItemId> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](ItemId a, ItemId b) {
    return table.ratings[a] < table.ratings[b];
  });
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && table.ratings[idx[j]] == table.ratings[idx[i]]) ++j;
    for (int p = i; p < j; ++p)
      for (int q = p + 1; q < j; ++q)
        if (!history.contains(idx[p], idx[q])) return true;
    i = j;
  }
  return false;
}

}  // namespace

Pairing swiss_pairing(const RatingTable& table, const PairHistory& history,
                      RngStream& rng) {
  Pairing pairing;
  if (table.size() < 2) return pairing;
  // Termination signal: every group of equal-rated items has either size one
  // or no pair left to play.
  if (!has_unplayed_equal_pair(table, history)) return pairing;

  const std::vector<ItemId> order = order_by_rating(table.ratings, rng);
  std::vector<char> used(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ItemId a = order[i];
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const ItemId b = order[j];
      if (used[j] || history.contains(a, b)) continue;
      used[i] = used[j] = 1;
      pairing.pairs.emplace_back(a, b);
      break;
    }
    if (!used[i]) {
      used[i] = 1;
      pairing.byes.push_back(a);
    }
  }
  return pairing;
}

double bernoulli_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

double info_gain(double p) { return p * (1.0 - p); }

Pairing infogain_pairing(const RatingTable& table, const PairHistory& history,
                         const OracleConfig& cfg, double ig_epsilon,
                         RngStream& rng) {
  struct WeightedPair {
    double ig;
    ItemId a;
    ItemId b;
  };
  const int n = table.size();
  std::vector<WeightedPair> eligible;
  for (ItemId a = 0; a < n; ++a) {
    for (ItemId b = a + 1; b < n; ++b) {
      if (history.contains(a, b)) continue;
      const double ig =
          info_gain(win_probability(table.ratings[a], table.ratings[b], cfg));
      if (ig < ig_epsilon) continue;  // non-informative pair
      eligible.push_back({ig, a, b});
    }
  }
  Pairing pairing;
  if (eligible.empty()) return pairing;
  rng.shuffle(eligible);
  std::stable_sort(eligible.begin(), eligible.end(),
                   [](const WeightedPair& x, const WeightedPair& y) {
                     return x.ig > y.ig;
                   });
  std::vector<char> used(n, 0);
  for (const WeightedPair& wp : eligible) {
    if (used[wp.a] || used[wp.b]) continue;
    used[wp.a] = used[wp.b] = 1;
    pairing.pairs.emplace_back(wp.a, wp.b);
  }
  return pairing;
}

}  // namespace prefarena
