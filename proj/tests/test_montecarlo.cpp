// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lenqd/montecarlo.hpp"
#include "lenqd/normal.hpp"
#include "oracles.hpp"

using namespace lenqd;

TEST_CASE("sup distance on a one-atom sample") {
  std::vector<double> zeros(10, 0.0);
  const auto cdf = EmpiricalCdf::of(zeros);
  CHECK(sup_distance_to_normal(cdf, -3.0, 3.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("sup distance on the plug-in quantile sample") {
  const std::size_t m = 1000;
  std::vector<double> sample(m);
  for (std::size_t i = 0; i < m; ++i) {
    sample[i] = std_normal_quantile((static_cast<double>(i) + 0.5) / m);
  }
  const auto cdf = EmpiricalCdf::of(std::move(sample));
  CHECK(sup_distance_to_normal(cdf, -3.0, 3.0) ==
        doctest::Approx(0.0005).epsilon(1e-4));
}

TEST_CASE("sup distance matches a dense-grid scan") {
  SplitStream rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 5 + static_cast<std::size_t>(rng.next_uniform() * 400);
    std::vector<double> sample(m);
    for (auto& v : sample) {
      v = 4.0 * (rng.next_uniform() - 0.5) + (trial % 3 - 1) * 0.4;
    }
    const auto cdf = EmpiricalCdf::of(std::move(sample));
    const double exact = sup_distance_to_normal(cdf, -3.0, 3.0);
    const double grid = oracles::ks_grid(cdf, -3.0, 3.0, 1e-4);
    CHECK(grid <= exact + 1e-12);  // the exact form dominates any grid
    CHECK(std::abs(exact - grid) <= 1e-4);
  }
  const EmpiricalCdf empty{};
  CHECK_THROWS_AS(sup_distance_to_normal(empty, -3.0, 3.0), std::domain_error);
}

TEST_CASE("qq points") {
  const std::size_t m = 200;
  std::vector<double> sample(m);
  for (std::size_t i = 0; i < m; ++i) {
    sample[i] = std_normal_quantile((static_cast<double>(i) + 0.5) / m);
  }
  const auto diag = qq_points(EmpiricalCdf::of(sample));
  for (const auto& p : diag) {
    CHECK(std::abs(p.theoretical - p.empirical) <= 1e-8);
  }

  for (auto& v : sample) v += 1.0;
  const auto shifted = qq_points(EmpiricalCdf::of(sample));
  for (const auto& p : shifted) {
    CHECK(std::abs(p.empirical - p.theoretical - 1.0) <= 1e-8);
  }

  const auto single = qq_points(EmpiricalCdf::of({0.0}));
  REQUIRE(single.size() == 1);
  CHECK(std::abs(single[0].theoretical) < 1e-15);
  CHECK(single[0].empirical == 0.0);
}

TEST_CASE("raw-sum experiment is deterministic and worker-invariant") {
  SimulationConfig cfg;
  cfg.n = 200;
  cfg.reps = 400;
  cfg.master_seed = 11;

  const auto first = run_clt_experiment(cfg);
  const auto second = run_clt_experiment(cfg);
  CHECK(first.delta == second.delta);
  REQUIRE(first.qq.size() == second.qq.size());
  CHECK(first.qq[17].empirical == second.qq[17].empirical);

  cfg.workers = 1;
  const auto serial = run_clt_experiment(cfg);
  cfg.workers = 4;
  const auto parallel = run_clt_experiment(cfg);
  CHECK(serial.delta == parallel.delta);
  for (std::size_t i = 0; i < serial.qq.size(); ++i) {
    CHECK(serial.qq[i].empirical == parallel.qq[i].empirical);
  }
}

TEST_CASE("one replicate reduces to a single-point empirical cdf") {
  SimulationConfig cfg;
  cfg.n = 50;
  cfg.reps = 1;
  cfg.master_seed = 3;
  const auto report = run_clt_experiment(cfg);
  REQUIRE(report.qq.size() == 1);
  const double v = report.qq[0].empirical;
  REQUIRE(v > -3.0);
  REQUIRE(v < 3.0);
  const double phi = std_normal_cdf(v);
  CHECK(report.delta == doctest::Approx(std::max(phi, 1.0 - phi)).epsilon(1e-14));
}

TEST_CASE("gaussian errors keep the error at monte carlo noise level") {
  SimulationConfig cfg;
  cfg.n = 100;
  cfg.reps = 1000;
  cfg.master_seed = 19;
  const auto report = run_clt_experiment(cfg);
  // 0.061 is the 99th percentile of the Kolmogorov statistic at M = 1000.
  CHECK(report.delta <= 0.061);
  CHECK(report.delta > 0.0);
  CHECK(report.analytic_variance ==
        doctest::Approx(100 * 0.8869 - 2 * 99 * 0.441).epsilon(1e-9));
}

TEST_CASE("wavelet experiment reports are invariant in f") {
  SimulationConfig cfg;
  cfg.n = 100;
  cfg.reps = 500;
  cfg.master_seed = 23;

  cfg.f = RegressionFunction::linear;
  const auto linear = run_wavelet_experiment(cfg);
  cfg.f = RegressionFunction::sine;
  const auto sine = run_wavelet_experiment(cfg);
  cfg.f = RegressionFunction::exponential;
  const auto expo = run_wavelet_experiment(cfg);

  CHECK(linear.delta == sine.delta);      // bit-identical by construction
  CHECK(linear.delta == expo.delta);
  for (std::size_t i = 0; i < linear.qq.size(); ++i) {
    CHECK(linear.qq[i].empirical == sine.qq[i].empirical);
  }
}

TEST_CASE("centered estimator equals the weighted error sum") {
  // Numerical check of the identity behind the f-invariant statistic:
  // dot(w, f(x) + eps) - dot(w, f(x)) agrees with dot(w, eps).
  const auto p = build_partition(64);
  const WaveletConfig cfg{2, ScalingFunction::haar};
  const auto w = haar_weights(p, cfg, 0.35);
  SplitStream rng(41);
  const auto f = regression_function(RegressionFunction::sine);
  std::vector<double> y(64), eps(64);
  for (std::size_t i = 0; i < 64; ++i) {
    eps[i] = rng.next_normal(0.0, 0.7);
    y[i] = f(p.x[i]) + eps[i];
  }
  const double centered = estimate(w, y) - estimator_mean(p, w, f);
  CHECK(std::abs(centered - estimate(w, eps)) <= 1e-12);
}

TEST_CASE("wavelet experiment is worker-invariant and deterministic") {
  SimulationConfig cfg;
  cfg.n = 300;
  cfg.reps = 300;
  cfg.master_seed = 29;
  cfg.workers = 1;
  const auto serial = run_wavelet_experiment(cfg);
  cfg.workers = 3;
  const auto parallel = run_wavelet_experiment(cfg);
  CHECK(serial.delta == parallel.delta);
  CHECK(serial.analytic_variance == parallel.analytic_variance);
}

TEST_CASE("uniform innovations are accepted by both experiments") {
  SimulationConfig cfg;
  cfg.n = 100;
  cfg.reps = 400;
  cfg.innovations = Innovations::uniform;
  cfg.master_seed = 31;
  const auto raw = run_clt_experiment(cfg);
  const auto wav = run_wavelet_experiment(cfg);
  CHECK(raw.delta > 0.0);
  CHECK(raw.delta < 0.25);
  CHECK(wav.delta > 0.0);
  CHECK(wav.delta < 0.25);
}

TEST_CASE("kolmogorov noise level of the gaussian harness") {
  // sqrt(M) * delta across 50 seeded runs should sit near the Kolmogorov
  // law (median about 0.83).
  std::vector<double> scaled;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SimulationConfig cfg;
    cfg.n = 50;
    cfg.reps = 500;
    cfg.master_seed = seed;
    scaled.push_back(std::sqrt(500.0) * run_clt_experiment(cfg).delta);
  }
  std::sort(scaled.begin(), scaled.end());
  const double median = 0.5 * (scaled[24] + scaled[25]);
  CHECK(median > 0.65);
  CHECK(median < 1.05);
}

TEST_CASE("rate fit recovers exact power laws") {
  std::vector<std::pair<double, double>> ninth;
  std::vector<std::pair<double, double>> half;
  std::vector<std::pair<double, double>> flat;
  for (double n : {100.0, 1000.0, 10000.0, 100000.0}) {
    ninth.emplace_back(n, std::pow(n, -1.0 / 9.0));
    half.emplace_back(n, 3.7 * std::pow(n, -0.5));
    flat.emplace_back(n, 0.25);
  }
  CHECK(rate_fit(ninth).slope == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
  CHECK(rate_fit(half).slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(rate_fit(flat).slope) <= 1e-12);

  std::vector<std::pair<double, double>> short_list{{10.0, 0.1}, {100.0, 0.05}};
  CHECK_THROWS_AS(rate_fit(short_list), std::domain_error);
  std::vector<std::pair<double, double>> negative{
      {10.0, 0.1}, {100.0, -0.05}, {1000.0, 0.01}};
  CHECK_THROWS_AS(rate_fit(negative), std::domain_error);
}

TEST_CASE("config validation") {
  SimulationConfig cfg;
  cfg.reps = 0;
  CHECK_THROWS_AS(run_clt_experiment(cfg), std::domain_error);
  CHECK_THROWS_AS(run_wavelet_experiment(cfg), std::domain_error);
}
