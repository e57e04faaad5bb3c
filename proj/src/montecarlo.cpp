// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lenqd/blocks.hpp"
#include "lenqd/normal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lenqd {

std::function<double(double)> regression_function(RegressionFunction f) {
  switch (f) {
    case RegressionFunction::linear:
      return [](double x) { return 2.0 * x - 1.0; };
    case RegressionFunction::sine:
      return [](double x) { return std::sin(2.0 * M_PI * x); };
    case RegressionFunction::exponential:
      return [](double x) { return std::exp(-2.0 * x); };
    case RegressionFunction::custom:
      throw std::domain_error("regression_function: custom has no default");
  }
  throw std::domain_error("regression_function: unknown id");
}

std::string to_string(RegressionFunction f) {
  switch (f) {
    case RegressionFunction::linear: return "linear";
    case RegressionFunction::sine: return "sine";
    case RegressionFunction::exponential: return "exp";
    case RegressionFunction::custom: return "custom";
  }
  return "?";
}

EmpiricalCdf EmpiricalCdf::of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return EmpiricalCdf{std::move(values)};
}

double EmpiricalCdf::operator()(double y) const {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), y);
  return static_cast<double>(it - sorted.begin()) /
         static_cast<double>(sorted.size());
}

double sup_distance_to_normal(const EmpiricalCdf& cdf, double lo, double hi) {
  const std::size_t m = cdf.size();
  if (m == 0) {
    throw std::domain_error("sup_distance_to_normal: empty sample");
  }
  if (!(lo < hi)) {
    throw std::domain_error("sup_distance_to_normal: empty range");
  }
  double delta = std::max(std::abs(cdf(lo) - std_normal_cdf(lo)),
                          std::abs(cdf(hi) - std_normal_cdf(hi)));
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double v = cdf.sorted[i];
    if (v <= lo || v > hi) continue;
    const double phi = std_normal_cdf(v);
    delta = std::max(delta, std::abs(static_cast<double>(i + 1) * inv_m - phi));
    delta = std::max(delta, std::abs(static_cast<double>(i) * inv_m - phi));
  }
  return delta;
}

std::vector<QqPoint> qq_points(const EmpiricalCdf& cdf) {
  const std::size_t m = cdf.size();
  if (m == 0) throw std::domain_error("qq_points: empty sample");
  std::vector<QqPoint> points(m);
  for (std::size_t i = 0; i < m; ++i) {
    points[i] = {std_normal_quantile((static_cast<double>(i) + 0.5) /
                                     static_cast<double>(m)),
                 cdf.sorted[i]};
  }
  return points;
}

namespace {

// One replicate of the raw-sum statistic: S_n / v.
double clt_statistic(const SimulationConfig& cfg, std::size_t n, double v,
                     std::uint64_t replicate) {
  SplitStream stream = SplitStream::substream(cfg.master_seed, replicate);
  const std::vector<double> series =
      sample_ma1(cfg.error, n, stream, cfg.innovations);
  double s = 0.0;
  for (double x : series) s += x;
  return s / v;
}

// One replicate of the standardized estimator statistic. The centered
// estimator is sum_i w_i eps_i identically, so the errors are consumed on
// the fly without materializing observations.
double wavelet_statistic(const SimulationConfig& cfg,
                         const std::vector<double>& w, double sd,
                         std::uint64_t replicate) {
  SplitStream stream = SplitStream::substream(cfg.master_seed, replicate);
  auto draw = [&]() {
    return cfg.innovations == Innovations::gaussian
               ? stream.next_normal(cfg.error.innovation_mean,
                                    cfg.error.innovation_sd)
               : stream.next_centered_uniform(cfg.error.innovation_mean,
                                              cfg.error.innovation_sd);
  };
  double prev = draw();  // W_0
  double acc = 0.0;
  for (double weight : w) {
    const double innovation = draw();
    acc += weight * (innovation - cfg.error.coeff * prev);
    prev = innovation;
  }
  return acc / sd;
}

// Serial reference: the plain loop the parallel kernel must reproduce
// bit for bit.
template <typename Statistic>
std::vector<double> replicate_values_serial(std::size_t reps,
                                            const Statistic& statistic) {
  std::vector<double> values(reps);
  for (std::size_t r = 0; r < reps; ++r) values[r] = statistic(r);
  return values;
}

template <typename Statistic>
std::vector<double> replicate_values_parallel(std::size_t reps,
                                              const Statistic& statistic,
                                              int workers) {
  std::vector<double> values(reps);
#ifdef _OPENMP
  const int threads = workers > 1 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::size_t r = 0; r < reps; ++r) values[r] = statistic(r);
#else
  (void)workers;
  for (std::size_t r = 0; r < reps; ++r) values[r] = statistic(r);
#endif
  return values;
}

template <typename Statistic>
std::vector<double> replicate_values(std::size_t reps,
                                     const Statistic& statistic, int workers) {
  return workers == 1 ? replicate_values_serial(reps, statistic)
                      : replicate_values_parallel(reps, statistic, workers);
}

BerryEsseenReport assemble_report(const SimulationConfig& cfg,
                                  std::vector<double> values,
                                  double analytic_variance) {
  BerryEsseenReport report;
  report.n = cfg.n;
  report.reps = cfg.reps;
  report.f = cfg.f;
  report.x_eval = cfg.x_eval;
  report.seed = cfg.master_seed;
  report.analytic_variance = analytic_variance;
  const EmpiricalCdf cdf = EmpiricalCdf::of(std::move(values));
  report.delta = sup_distance_to_normal(cdf, cfg.y_lo, cfg.y_hi);
  report.qq = qq_points(cdf);
  return report;
}

}  // namespace

BerryEsseenReport run_clt_experiment(const SimulationConfig& cfg) {
  if (cfg.reps == 0) {
    throw std::domain_error("run_clt_experiment: reps must be >= 1");
  }
  const TridiagCovariance cov = ma1_covariance(cfg.error, cfg.n);
  const BlockDiagnostics diag =
      exact_variances(block_scheme(cfg.n), cov);  // validates Var(S_n) > 0
  const double v = std::sqrt(diag.total_var);
  auto statistic = [&](std::size_t r) {
    return clt_statistic(cfg, cfg.n, v, r);
  };
  return assemble_report(cfg,
                         replicate_values(cfg.reps, statistic, cfg.workers),
                         diag.total_var);
}

BerryEsseenReport run_wavelet_experiment(const SimulationConfig& cfg) {
  if (cfg.reps == 0) {
    throw std::domain_error("run_wavelet_experiment: reps must be >= 1");
  }
  const DesignPartition partition = build_partition(cfg.n);
  const WaveletConfig wavelet_cfg{cfg.k_rule.level_for(cfg.n),
                                  ScalingFunction::haar};
  const WaveletWeights weights =
      haar_weights(partition, wavelet_cfg, cfg.x_eval);
  const TridiagCovariance cov = ma1_covariance(cfg.error, cfg.n);
  const double variance = estimator_variance(weights, cov);
  if (!(variance > 0.0)) {
    throw std::domain_error(
        "run_wavelet_experiment: zero analytic variance at this x");
  }
  const double sd = std::sqrt(variance);
  auto statistic = [&](std::size_t r) {
    return wavelet_statistic(cfg, weights.w, sd, r);
  };
  return assemble_report(cfg,
                         replicate_values(cfg.reps, statistic, cfg.workers),
                         variance);
}

PowerFit rate_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw std::domain_error("rate_fit: need at least three points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [n, delta] : points) {
    if (!(n > 0.0) || !(delta > 0.0)) {
      throw std::domain_error("rate_fit: points must be positive");
    }
    const double lx = std::log(n);
    const double ly = std::log(delta);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = static_cast<double>(points.size());
  PowerFit fit;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  return fit;
}

}  // namespace lenqd
