// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#ifndef PREFARENA_RNG_HPP
#define PREFARENA_RNG_HPP

#include "prefarena/types.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace prefarena {

// Deterministic pseudo-random stream built on the splitmix64 generator.
//
// The generator algorithm is fixed for this artifact so that replaying any
// run with the same seed yields bit-identical results on every platform the
// artifact builds on:
//   state_{n+1} = state_n + 0x9E3779B97F4A7C15
//   output      = splitmix64 finalizer of state_{n+1}
//
// Child streams are derived from the *construction seed*, never from the
// current draw position, so sibling streams are independent of the order in
// which their parents are used:
//   child(tag).seed = mix64(parent_seed, tag)
// with mix64(a, b) = finalizer(a ^ (b + 0x9E3779B97F4A7C15 + (a<<6) + (a>>2))).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return finalize(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
  }

  RngStream child(std::uint64_t tag) const { return RngStream(mix64(seed_, tag)); }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound >= 1. Rejection-sampled to avoid
  // modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Normal draw via the Marsaglia polar method; the spare deviate is cached.
  double normal(double mu, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do {
      u = 2.0 * uniform_real() - 1.0;
      v = 2.0 * uniform_real() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return mu + sigma * (u * factor);
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Draws the hidden true values: n_items i.i.d. normal(mu, sigma) deviates.
LatentPopulation sample_population(int n_items, double mu, double sigma,
                                   RngStream& rng);

}  // namespace prefarena

#endif  // PREFARENA_RNG_HPP
