// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lenqd/ma1.hpp"

namespace lenqd {

// Fixed design on [0, 1]: points x_i = i/n surrounded by cells
// Gamma_i = [s_{i-1}, s_i) with s_0 = 0, s_n = 1 and midpoints in between.
// The last cell is treated as closed at 1 so that x_n = 1 belongs to it.
struct DesignPartition {
  std::size_t n = 0;
  std::vector<double> x;  // x[i] = (i+1)/n, i = 0..n-1
  std::vector<double> s;  // n + 1 cell boundaries
};

// n >= 2; throws std::domain_error otherwise.
DesignPartition build_partition(std::size_t n);

enum class ScalingFunction { haar };

// Resolution level k of the projection kernel. Only the Haar scaling
// function is built in; the weight computation reduces to dyadic interval
// overlaps, and another piecewise-constant compactly supported scaling
// function would slot into the same overlap machinery.
struct WaveletConfig {
  int level = 0;
  ScalingFunction scaling = ScalingFunction::haar;
};

// Estimator weights at an evaluation point: w[i] is the integral of the
// order-k kernel over cell i. The positive/negative split is carried along;
// for Haar the negative part is identically zero.
struct WaveletWeights {
  std::vector<double> w;
  std::vector<double> w_plus;
  std::vector<double> w_minus;
  double x_eval = 0.0;

  double sum() const;
  // Cells with strictly positive weight (the rest integrate to zero).
  std::size_t positive_cells() const;
};

// w_i = 2^k * |Gamma_i ∩ D(x)| where D(x) is the dyadic cell of length
// 2^-k containing x, with x = 1 clamped into the last cell. Weights are
// nonnegative and sum to 1. x outside [0, 1] is a domain error.
WaveletWeights haar_weights(const DesignPartition& p, const WaveletConfig& cfg,
                            double x);

// Estimator value sum_i w_i y_i.
double estimate(const WaveletWeights& weights, std::span<const double> y);
double estimate(const DesignPartition& p, const WaveletConfig& cfg, double x,
                std::span<const double> y);

// Exact mean under the regression model with centered errors:
// sum_i f(x_i) w_i.
double estimator_mean(const DesignPartition& p, const WaveletWeights& weights,
                      const std::function<double(double)>& f);

// Exact variance of sum_i w_i eps_i under a tridiagonal error covariance:
// diag * sum w_i^2 + 2 * off * sum w_i w_{i+1}. A result below -1e-12
// indicates a covariance that is not positive semidefinite and raises
// std::runtime_error; tiny negative round-off is clamped to zero.
double estimator_variance(const WaveletWeights& weights,
                          const TridiagCovariance& cov);

// Var[sum w_i eps_i] / Var[sum w_i^+ eps_i]. Equals 1 exactly for Haar
// weights. Zero positive-part variance is a degenerate input
// (std::domain_error).
double variance_ratio(const WaveletWeights& weights,
                      const TridiagCovariance& cov);

// Resolution-dependent bias rate of the projection at level k for a
// function of Sobolev order nu:
//   (2^-k)^(nu - 1/2)  for 1/2 < nu < 3/2,
//   sqrt(k) * 2^-k     for nu = 3/2,
//   2^-k               for nu > 3/2.
// Requires nu > 1/2 and k >= 1.
double resolution_bias_rate(double sobolev_order, int level);

// Level selection rule: by default the dyadic level closest to
// 2^k = n^(1/3), i.e. k = round(log2(n) / 3); a fixed level can be forced.
struct ResolutionRule {
  int fixed_level = -1;
  int level_for(std::size_t n) const;
};

struct BiasPoint {
  std::size_t n;
  double sup_bias;   // max over a 101-point x grid of |E f_n(x) - f(x)|
  double reference;  // n^-gamma + resolution_bias_rate(nu, k(n))
};

struct BiasCurve {
  std::vector<BiasPoint> points;
  double slope = 0.0;  // OLS slope of log sup_bias on log n (NaN if bias 0)
  double intercept = 0.0;
};

// Deterministic bias experiment: exact estimator means against f on a fixed
// 101-point grid, one row per sample size.
BiasCurve bias_curve(const std::function<double(double)>& f,
                     double lipschitz_order, double sobolev_order,
                     std::span<const std::size_t> ns,
                     const ResolutionRule& rule);

}  // namespace lenqd
