// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lenqd/ma1.hpp"
#include "lenqd/wavelet.hpp"

namespace lenqd {

enum class RegressionFunction { linear, sine, exponential, custom };

// linear: 2x - 1, sine: sin(2 pi x), exponential: exp(-2x).
std::function<double(double)> regression_function(RegressionFunction f);
std::string to_string(RegressionFunction f);

// Full description of one experiment run. Every random quantity is derived
// from master_seed, replicate r drawing from substream (master_seed, r), so
// a config maps to a bit-identical report at any worker count.
struct SimulationConfig {
  std::size_t n = 100;
  std::size_t reps = 1000;  // M
  RegressionFunction f = RegressionFunction::linear;
  std::function<double(double)> custom_f;  // used when f == custom
  Ma1Params error;
  Innovations innovations = Innovations::gaussian;
  ResolutionRule k_rule;
  double x_eval = 0.5;
  double y_lo = -3.0;
  double y_hi = 3.0;
  std::uint64_t master_seed = 1;
  int workers = 0;  // 0 = all cores, 1 = serial reference path
};

// Right-continuous empirical distribution of a sorted sample.
struct EmpiricalCdf {
  std::vector<double> sorted;

  static EmpiricalCdf of(std::vector<double> values);
  std::size_t size() const { return sorted.size(); }
  double operator()(double y) const;  // #{i : sample_i <= y} / size
};

struct QqPoint {
  double theoretical;
  double empirical;
};

struct BerryEsseenReport {
  std::size_t n = 0;
  std::size_t reps = 0;
  RegressionFunction f = RegressionFunction::linear;
  double x_eval = 0.0;
  std::uint64_t seed = 0;
  double delta = 0.0;              // sup |F_hat(y) - Phi(y)| over [y_lo, y_hi]
  double analytic_variance = 0.0;  // exact variance used for standardization
  std::vector<QqPoint> qq;
};

// Exact Kolmogorov distance between the empirical step function and Phi,
// restricted to [lo, hi]. Because the empirical CDF is a step function and
// Phi is monotone, checking both one-sided gaps at every in-range order
// statistic plus the two endpoints realizes the supremum exactly - no grid.
// Empty samples are a domain error.
double sup_distance_to_normal(const EmpiricalCdf& cdf, double lo, double hi);

// (Phi^-1((i - 1/2) / m), x_(i)) for i = 1..m.
std::vector<QqPoint> qq_points(const EmpiricalCdf& cdf);

// Distribution of S_n / sd(S_n) for the MA(1) series, the raw-sum central
// limit experiment. With Gaussian innovations the statistic is exactly
// standard normal, so delta measures pure Monte Carlo noise.
BerryEsseenReport run_clt_experiment(const SimulationConfig& cfg);

// Distribution of (f_n(x) - E f_n(x)) / sd at the evaluation point. The
// centered estimator equals sum_i w_i(x) eps_i identically in the model, so
// the statistic is computed from the error sequence and the report does not
// depend on the regression function (recorded as metadata only).
BerryEsseenReport run_wavelet_experiment(const SimulationConfig& cfg);

struct PowerFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// OLS fit of log(delta) on log(n). Requires at least three points with
// positive coordinates (std::domain_error otherwise).
PowerFit rate_fit(std::span<const std::pair<double, double>> points);

}  // namespace lenqd
