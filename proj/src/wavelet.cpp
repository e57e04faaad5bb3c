// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lenqd {

DesignPartition build_partition(std::size_t n) {
  if (n < 2) throw std::domain_error("build_partition: n must be >= 2");
  DesignPartition p;
  p.n = n;
  p.x.resize(n);
  p.s.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    p.x[i] = static_cast<double>(i + 1) / static_cast<double>(n);
  }
  p.s[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) p.s[i] = 0.5 * (p.x[i - 1] + p.x[i]);
  p.s[n] = 1.0;
  return p;
}

double WaveletWeights::sum() const {
  double total = 0.0;
  for (double v : w) total += v;
  return total;
}

std::size_t WaveletWeights::positive_cells() const {
  std::size_t count = 0;
  for (double v : w) count += v > 0.0;
  return count;
}

WaveletWeights haar_weights(const DesignPartition& p, const WaveletConfig& cfg,
                            double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("haar_weights: x must lie in [0, 1]");
  }
  if (cfg.level < 0 || cfg.level > 40) {
    throw std::domain_error("haar_weights: level out of range");
  }
  const double cells = std::exp2(cfg.level);
  // Dyadic cell containing x; x = 1 is clamped into the last cell so that
  // D(x) stays inside [0, 1] and the weights keep summing to one.
  double m = std::min(std::floor(x * cells), cells - 1.0);
  const double d_lo = m / cells;
  const double d_hi = (m + 1.0) / cells;

  WaveletWeights weights;
  weights.x_eval = x;
  weights.w.resize(p.n, 0.0);
  for (std::size_t i = 0; i < p.n; ++i) {
    const double lo = std::max(p.s[i], d_lo);
    const double hi = std::min(p.s[i + 1], d_hi);
    if (hi > lo) weights.w[i] = (hi - lo) * cells;  // cells is a power of two
  }
  weights.w_plus = weights.w;
  weights.w_minus.assign(p.n, 0.0);
  return weights;
}

double estimate(const WaveletWeights& weights, std::span<const double> y) {
  if (y.size() != weights.w.size()) {
    throw std::domain_error("estimate: observation length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) acc += weights.w[i] * y[i];
  return acc;
}

double estimate(const DesignPartition& p, const WaveletConfig& cfg, double x,
                std::span<const double> y) {
  return estimate(haar_weights(p, cfg, x), y);
}

double estimator_mean(const DesignPartition& p, const WaveletWeights& weights,
                      const std::function<double(double)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (weights.w[i] != 0.0) acc += weights.w[i] * f(p.x[i]);
  }
  return acc;
}

namespace {

double tridiag_quadratic_form(std::span<const double> v,
                              const TridiagCovariance& cov) {
  double sq = 0.0, cross = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sq += v[i] * v[i];
    if (i + 1 < v.size()) cross += v[i] * v[i + 1];
  }
  return cov.diag * sq + 2.0 * cov.off * cross;
}

}  // namespace

double estimator_variance(const WaveletWeights& weights,
                          const TridiagCovariance& cov) {
  if (cov.n != weights.w.size()) {
    throw std::domain_error("estimator_variance: covariance size mismatch");
  }
  const double var = tridiag_quadratic_form(weights.w, cov);
  if (var < -1e-12) {
    throw std::runtime_error(
        "estimator_variance: negative variance (covariance not PSD)");
  }
  return std::max(var, 0.0);
}

double variance_ratio(const WaveletWeights& weights,
                      const TridiagCovariance& cov) {
  if (cov.n != weights.w.size()) {
    throw std::domain_error("variance_ratio: covariance size mismatch");
  }
  const double plus_var = tridiag_quadratic_form(weights.w_plus, cov);
  if (!(plus_var > 0.0)) {
    throw std::domain_error(
        "variance_ratio: positive-part variance is degenerate");
  }
  return tridiag_quadratic_form(weights.w, cov) / plus_var;
}

double resolution_bias_rate(double sobolev_order, int level) {
  if (!(sobolev_order > 0.5)) {
    throw std::domain_error("resolution_bias_rate: order must exceed 1/2");
  }
  if (level < 1) {
    throw std::domain_error("resolution_bias_rate: level must be >= 1");
  }
  const double inv = std::exp2(-level);
  if (sobolev_order < 1.5) return std::pow(inv, sobolev_order - 0.5);
  if (sobolev_order == 1.5) return std::sqrt(static_cast<double>(level)) * inv;
  return inv;
}

int ResolutionRule::level_for(std::size_t n) const {
  if (fixed_level >= 0) return fixed_level;
  return static_cast<int>(
      std::llround(std::log2(static_cast<double>(n)) / 3.0));
}

BiasCurve bias_curve(const std::function<double(double)>& f,
                     double lipschitz_order, double sobolev_order,
                     std::span<const std::size_t> ns,
                     const ResolutionRule& rule) {
  BiasCurve curve;
  bool all_positive = true;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const std::size_t n = ns[idx];
    if (idx > 0 && n <= ns[idx - 1]) {
      throw std::domain_error("bias_curve: sample sizes must increase");
    }
    const int k = rule.level_for(n);
    const DesignPartition p = build_partition(n);
    const WaveletConfig cfg{k, ScalingFunction::haar};
    double sup = 0.0;
    for (int j = 0; j <= 100; ++j) {
      const double x = j / 100.0;
      const WaveletWeights weights = haar_weights(p, cfg, x);
      sup = std::max(sup, std::abs(estimator_mean(p, weights, f) - f(x)));
    }
    const double reference =
        std::pow(static_cast<double>(n), -lipschitz_order) +
        resolution_bias_rate(sobolev_order, k);
    curve.points.push_back({n, sup, reference});
    all_positive = all_positive && sup > 0.0;
  }

  if (curve.points.size() >= 2 && all_positive) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double count = static_cast<double>(curve.points.size());
    for (const auto& pt : curve.points) {
      const double lx = std::log(static_cast<double>(pt.n));
      const double ly = std::log(pt.sup_bias);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    curve.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    curve.intercept = (sy - curve.slope * sx) / count;
  } else {
    curve.slope = std::numeric_limits<double>::quiet_NaN();
    curve.intercept = std::numeric_limits<double>::quiet_NaN();
  }
  return curve;
}

}  // namespace lenqd
