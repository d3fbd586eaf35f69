// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/rng.hpp"
#include "prefarena/types.hpp"

#include <string>

namespace prefarena {

const char* method_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::kBradleyTerry: return "bradley_terry";
    case MethodKind::kBordaRnd: return "borda_rnd";
    case MethodKind::kBordaCopeland: return "borda_copeland";
    case MethodKind::kEloRnd: return "elo_rnd";
    case MethodKind::kEloCopeland: return "elo_copeland";
    case MethodKind::kSwiss: return "swiss";
    case MethodKind::kRndSwiss: return "rnd_swiss";
    case MethodKind::kSwissInfogain: return "swiss_infogain";
  }
  return "unknown";
}

MethodKind parse_method_name(const std::string& name) {
  for (MethodKind kind : kAllMethodKinds) {
    if (name == method_name(kind)) return kind;
  }
  throw ConfigError("unknown method '" + name + "'");
}

LatentPopulation sample_population(int n_items, double mu, double sigma,
                                   RngStream& rng) {
  if (n_items < 2) throw ConfigError("population needs at least 2 items");
  if (sigma < 0.0) throw ConfigError("population sigma must be >= 0");
  LatentPopulation pop;
  pop.n_items = n_items;
  pop.mu = mu;
  pop.sigma = sigma;
  pop.values.resize(n_items);
  for (int i = 0; i < n_items; ++i) pop.values[i] = rng.normal(mu, sigma);
  return pop;
}

}  // namespace prefarena
