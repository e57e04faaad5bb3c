// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/inequalities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lenqd/normal.hpp"

namespace lenqd {

namespace {

constexpr double kSlackTol = 1e-12;
constexpr double kSqrt2Pi = 2.5066282746310002;

InequalityReport make_report(std::string name, std::string params, double lhs,
                             double rhs) {
  InequalityReport report;
  report.name = std::move(name);
  report.params = std::move(params);
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = rhs - lhs;
  report.holds = report.slack >= -kSlackTol;
  return report;
}

}  // namespace

InequalityReport check_smoothing(double delta, double a) {
  if (!(delta > 0.0) || !(a > 0.0)) {
    throw std::domain_error("check_smoothing: delta and a must be positive");
  }
  double lhs = 0.0;
  for (long i = -10000; i <= 10000; ++i) {
    const double u = i * 1e-3;
    lhs = std::max(lhs, std::abs(std_normal_cdf(u - delta) - std_normal_cdf(u)));
  }
  const double rhs = a / kSqrt2Pi + (delta > a ? 1.0 : 0.0);
  std::ostringstream params;
  params << "delta=" << delta << ";a=" << a;
  return make_report("smoothing", params.str(), lhs, rhs);
}

InequalityReport check_charfn_bound(const Ma1Params& params, std::size_t n,
                                    double t) {
  if (n == 0 || n > 64) {
    throw std::domain_error("check_charfn_bound: n must lie in [1, 64]");
  }
  const TridiagCovariance cov = ma1_covariance(params, n);
  const double total_var = static_cast<double>(n) * cov.diag +
                           2.0 * static_cast<double>(n - 1) * cov.off;
  const double indep_var = static_cast<double>(n) * cov.diag;
  const double lhs = std::abs(std::exp(-0.5 * t * t * total_var) -
                              std::exp(-0.5 * t * t * indep_var));
  const double rhs =
      2.0 * t * t * static_cast<double>(n - 1) * std::abs(cov.off);
  std::ostringstream desc;
  desc << "coeff=" << params.coeff << ";sd=" << params.innovation_sd
       << ";n=" << n << ";t=" << t;
  return make_report("charfn", desc.str(), lhs, rhs);
}

InequalityReport check_phi_scale(double a) {
  if (!(a > 0.0)) throw std::domain_error("check_phi_scale: a must be positive");
  double lhs = 0.0;
  for (long i = -100000; i <= 100000; ++i) {
    const double x = i * 1e-4;
    lhs = std::max(lhs, std::abs(std_normal_cdf(a * x) - std_normal_cdf(x)));
  }
  const double rhs = (std::abs(a - 1.0) + std::abs(1.0 / a - 1.0)) /
                     (std::exp(1.0) * kSqrt2Pi);
  std::ostringstream params;
  params << "a=" << a;
  return make_report("phi_scale", params.str(), lhs, rhs);
}

RosenthalProbe probe_rosenthal(const Ma1Params& params, std::size_t n, int p,
                               std::size_t reps, std::uint64_t seed) {
  if (p != 2 && p != 3 && p != 4) {
    throw std::domain_error("probe_rosenthal: p must be 2, 3 or 4");
  }
  if (reps < 1000) {
    throw std::domain_error("probe_rosenthal: reps must be >= 1000");
  }
  const TridiagCovariance cov = ma1_covariance(params, n);
  double mean_abs_pow = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    SplitStream stream = SplitStream::substream(seed, r);
    const std::vector<double> series = sample_ma1(params, n, stream);
    double s = 0.0;
    for (double v : series) s += v;
    mean_abs_pow += std::pow(std::abs(s), p);
  }
  mean_abs_pow /= static_cast<double>(reps);

  // Exact absolute moments of a centered Gaussian with variance diag.
  const double sd = std::sqrt(cov.diag);
  double term_moment = 0.0;
  switch (p) {
    case 2: term_moment = cov.diag; break;
    case 3: term_moment = 2.0 * std::sqrt(2.0 / M_PI) * sd * sd * sd; break;
    case 4: term_moment = 3.0 * cov.diag * cov.diag; break;
  }
  const double sum_sq = static_cast<double>(n) * cov.diag;
  const double bracket = static_cast<double>(n) * term_moment +
                         std::pow(sum_sq, 0.5 * p);

  RosenthalProbe probe;
  probe.empirical_lhs = mean_abs_pow;
  probe.bracket = bracket;
  probe.ratio = mean_abs_pow / bracket;
  return probe;
}

std::vector<InequalityReport> default_inequality_grid() {
  std::vector<InequalityReport> reports;
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      reports.push_back(check_smoothing(i / 20.0, j / 20.0));
    }
  }
  for (double coeff : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    Ma1Params params{coeff, 0.7, 0.0};
    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
      for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        reports.push_back(check_charfn_bound(params, n, t));
      }
    }
  }
  for (int i = 0; i < 60; ++i) {
    // 60 log-spaced points spanning [0.1, 10].
    const double a = std::pow(10.0, -1.0 + 2.0 * i / 59.0);
    reports.push_back(check_phi_scale(a));
  }
  return reports;
}

}  // namespace lenqd
