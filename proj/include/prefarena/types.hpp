// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#ifndef PREFARENA_TYPES_HPP
#define PREFARENA_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prefarena {

// Items are dense indices in [0, N).
using ItemId = std::int32_t;

// Raised for malformed configuration files or override strings.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for file-system failures (unreadable/unwritable paths).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails (e.g. a match record
// referencing an item outside the rating table).
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Outcome { kWinA, kTie, kWinB };

// (s_a, s_b) with s_a + s_b == 1: win -> (1,0), tie -> (0.5,0.5), loss -> (0,1).
inline std::pair<double, double> score_pair(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWinA: return {1.0, 0.0};
    case Outcome::kTie: return {0.5, 0.5};
    case Outcome::kWinB: return {0.0, 1.0};
  }
  return {0.5, 0.5};
}

// One annotated comparison. `round` is the 0-based round the pair was played in.
struct MatchRecord {
  ItemId a = 0;
  ItemId b = 0;
  Outcome outcome = Outcome::kTie;
  int round = 0;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

// Hidden per-item true values. Drawn once per seed and never mutated.
struct LatentPopulation {
  int n_items = 0;
  Eigen::VectorXd values;
  double mu = 1000.0;
  double sigma = 200.0;
};

// Per-item estimation state shared by the rating-based methods.
//   ratings:      current estimate (Elo points or rescaled score)
//   scores:       cumulative tournament score (win 1, tie 0.5, loss 0)
//   games_played: number of comparisons the item has taken part in
struct RatingTable {
  explicit RatingTable(int n_items, double initial_rating = 1000.0)
      : ratings(Eigen::VectorXd::Constant(n_items, initial_rating)),
        scores(Eigen::VectorXd::Zero(n_items)),
        games_played(Eigen::VectorXi::Zero(n_items)) {}

  int size() const { return static_cast<int>(ratings.size()); }

  Eigen::VectorXd ratings;
  Eigen::VectorXd scores;
  Eigen::VectorXi games_played;
};

enum class EloBase { kNatural, kTen };

// Parameters of the simulated annotator (and of expected-score evaluation on
// estimated ratings, which reuses the same logistic curve).
struct OracleConfig {
  double elo_scale = 400.0;
  EloBase elo_base = EloBase::kNatural;
  double tie_coefficient = 1.0 / 3.0;
  double tie_sigma = 200.0;

  void validate() const {
    if (elo_scale <= 0.0) throw ConfigError("elo_scale must be > 0");
    if (tie_coefficient < 0.0 || tie_coefficient > 1.0 / 3.0 + 1e-12)
      throw ConfigError("tie_coefficient must be in [0, 1/3]");
    if (tie_sigma <= 0.0) throw ConfigError("tie_sigma must be > 0");
  }
};

// K-factor schedule for batch Elo updates. FIXED uses k_fixed; DECAY uses
// max(k_min, k0 / (1 + games/5)).
struct EloConfig {
  enum class Schedule { kFixed, kDecay };

  double k_fixed = 32.0;
  double k0 = 40.0;
  double k_min = 10.0;
  Schedule schedule = Schedule::kFixed;

  void validate() const {
    if (k_fixed <= 0.0 || k0 <= 0.0 || k_min <= 0.0)
      throw ConfigError("K factors must be > 0");
    if (k_min > k0) throw ConfigError("k_min must not exceed k0");
  }
};

// Gradient-descent settings for the Bradley-Terry fit.
struct BtFitConfig {
  int epochs = 20;
  double learning_rate = 0.01;

  void validate() const {
    if (epochs < 1) throw ConfigError("bt epochs must be >= 1");
    if (learning_rate <= 0.0) throw ConfigError("bt learning rate must be > 0");
  }
};

enum class MethodKind {
  kBradleyTerry,
  kBordaRnd,
  kBordaCopeland,
  kEloRnd,
  kEloCopeland,
  kSwiss,
  kRndSwiss,
  kSwissInfogain,
};

inline constexpr MethodKind kAllMethodKinds[] = {
    MethodKind::kBradleyTerry, MethodKind::kBordaRnd,
    MethodKind::kBordaCopeland, MethodKind::kEloRnd,
    MethodKind::kEloCopeland,   MethodKind::kSwiss,
    MethodKind::kRndSwiss,      MethodKind::kSwissInfogain,
};

const char* method_name(MethodKind kind);
MethodKind parse_method_name(const std::string& name);

// Fully-specified description of one method run. Only the fields relevant to
// `kind` are consulted.
struct MethodSpec {
  MethodKind kind = MethodKind::kBradleyTerry;

  double redundancy_c = 1.0;  // BRADLEY_TERRY: M = round(c * N / 2)
  int rounds = 1;             // BORDA_*/ELO_*: matching rounds or full robins
  int r_rnd = 0;              // RND_SWISS: random rounds
  int r_swiss = 0;            // RND_SWISS: swiss rounds
  int r_max = 200;            // SWISS / SWISS_INFOGAIN round cap
  double ig_epsilon = 0.05;   // SWISS_INFOGAIN informativeness cutoff

  EloConfig elo;
  BtFitConfig bt;

  void validate() const {
    if (redundancy_c < 0.0) throw ConfigError("redundancy_c must be >= 0");
    if (rounds < 0 || r_rnd < 0 || r_swiss < 0 || r_max < 0)
      throw ConfigError("round counts must be >= 0");
    if (ig_epsilon < 0.0 || ig_epsilon >= 0.25)
      throw ConfigError("ig_epsilon must be in [0, 0.25)");
    elo.validate();
    bt.validate();
  }
};

// A plain numeric table with named columns, used for the diagnostic curves.
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

}  // namespace prefarena

#endif  // PREFARENA_TYPES_HPP
