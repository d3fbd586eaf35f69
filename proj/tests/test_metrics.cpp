// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefarena/metrics.hpp"
#include "prefarena/rng.hpp"

#include <cmath>
#include <vector>

using namespace prefarena;

TEST_CASE("perfectly correlated and anti-correlated inputs") {
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  CHECK(pearson(x, x).r == doctest::Approx(1.0));
  CHECK(pearson(x, -x).r == doctest::Approx(-1.0));
}

TEST_CASE("hand-evaluated correlation") {
  Eigen::VectorXd x(4), y(4);
  x << 1, 2, 3, 4;
  y << 1, 2, 3, 10;
  // means 2.5 and 4; cov-sum 4.5+1-0.5+9 = 14; ss_x 5; ss_y 50
  CHECK(pearson(x, y).r ==
        doctest::Approx(14.0 / std::sqrt(250.0)).epsilon(1e-12));
  CHECK(pearson(x, y).r == doctest::Approx(0.885438).epsilon(1e-5));
}

TEST_CASE("zero variance is degenerate, not an error") {
  Eigen::VectorXd flat = Eigen::VectorXd::Constant(5, 3.0);
  Eigen::VectorXd vary(5);
  vary << 1, 2, 3, 4, 5;
  const PearsonResult result = pearson(flat, vary);
  CHECK(result.degenerate);
  CHECK(result.r == 0.0);
  CHECK(!pearson(vary, vary).degenerate);
}

TEST_CASE("bad shapes are rejected") {
  Eigen::VectorXd a(3), b(2), single(1);
  a << 1, 2, 3;
  b << 1, 2;
  single << 1;
  CHECK_THROWS_AS(pearson(a, b), std::invalid_argument);
  CHECK_THROWS_AS(pearson(single, single), std::invalid_argument);
}

TEST_CASE("correlation is invariant under positive affine maps") {
  RngStream rng(1);
  Eigen::VectorXd x(40), y(40);
  for (int i = 0; i < 40; ++i) {
    x[i] = rng.normal(0, 1);
    y[i] = 0.8 * x[i] + rng.normal(0, 0.5);
  }
  const double base = pearson(x, y).r;
  const Eigen::VectorXd scaled = (x.array() * 200.0 + 1000.0).matrix();
  CHECK(std::abs(pearson(scaled, y).r - base) < 1e-12);
}

TEST_CASE("aggregate of identical values has zero width") {
  const std::vector<double> values = {0.5, 0.5, 0.5};
  const AggregateStat stat = aggregate(values);
  CHECK(stat.mean == 0.5);
  CHECK(stat.ci_low == 0.5);
  CHECK(stat.ci_high == 0.5);
  CHECK(stat.sd == 0.0);
}

TEST_CASE("a single value collapses the interval to the point") {
  const std::vector<double> one = {0.7};
  const AggregateStat stat = aggregate(one);
  CHECK(stat.mean == 0.7);
  CHECK(stat.ci_low == 0.7);
  CHECK(stat.ci_high == 0.7);
  CHECK(stat.n_seeds == 1);
}

TEST_CASE("hand-evaluated confidence interval") {
  const std::vector<double> values = {0.90, 0.92, 0.94, 0.96};
  const AggregateStat stat = aggregate(values);
  CHECK(stat.mean == doctest::Approx(0.93).epsilon(1e-12));
  CHECK(stat.sd == doctest::Approx(0.0258199).epsilon(1e-5));
  const double half = 1.96 * stat.sd / 2.0;
  CHECK(stat.ci_high - stat.mean == doctest::Approx(half).epsilon(1e-12));
  CHECK(stat.ci_high - stat.mean == doctest::Approx(0.0253).epsilon(1e-3));
}

TEST_CASE("empty inputs and unsupported levels are rejected") {
  CHECK_THROWS_AS(aggregate(std::vector<double>{}), std::invalid_argument);
  const std::vector<double> values = {0.5, 0.6};
  CHECK_THROWS_AS(aggregate(values, 0.9), std::invalid_argument);
}
