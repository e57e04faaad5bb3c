// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/ma1.hpp"

#include <cmath>
#include <stdexcept>

namespace lenqd {

TridiagCovariance::TridiagCovariance(std::size_t n_, double diag_, double off_)
    : n(n_), diag(diag_), off(off_) {
  if (n == 0) throw std::domain_error("TridiagCovariance: n must be >= 1");
  if (!(diag > 0.0)) {
    throw std::domain_error("TridiagCovariance: diag must be positive");
  }
  if (diag < 2.0 * std::abs(off)) {
    throw std::domain_error(
        "TridiagCovariance: diag >= 2|off| required for positive "
        "semidefiniteness");
  }
}

TridiagCovariance ma1_covariance(const Ma1Params& params, std::size_t n) {
  if (n == 0) throw std::domain_error("ma1_covariance: n must be >= 1");
  if (!(params.innovation_sd > 0.0)) {
    throw std::domain_error("ma1_covariance: innovation_sd must be positive");
  }
  const double s2 = params.innovation_sd * params.innovation_sd;
  const double b = params.coeff;
  return TridiagCovariance(n, (1.0 + b * b) * s2, -b * s2);
}

std::vector<double> sample_ma1(const Ma1Params& params, std::size_t n,
                               SplitStream& stream, Innovations innovations) {
  if (n == 0) throw std::domain_error("sample_ma1: n must be >= 1");
  if (!(params.innovation_sd > 0.0)) {
    throw std::domain_error("sample_ma1: innovation_sd must be positive");
  }
  auto draw = [&]() {
    return innovations == Innovations::gaussian
               ? stream.next_normal(params.innovation_mean,
                                    params.innovation_sd)
               : stream.next_centered_uniform(params.innovation_mean,
                                              params.innovation_sd);
  };
  std::vector<double> x(n);
  double prev = draw();  // W_0
  for (std::size_t i = 0; i < n; ++i) {
    double w = draw();
    x[i] = w - params.coeff * prev;
    prev = w;
  }
  return x;
}

std::vector<double> sample_ma1(const Ma1Params& params, std::size_t n,
                               std::uint64_t seed, Innovations innovations) {
  SplitStream stream(seed);
  return sample_ma1(params, n, stream, innovations);
}

double covariance_tail_sum(const TridiagCovariance& cov, std::size_t m) {
  if (m == 0) throw std::domain_error("covariance_tail_sum: m must be >= 1");
  // Only the lag-1 covariance is nonzero; it is counted when the tail
  // starts at or before index 2.
  if (m <= 2 && cov.n >= 2) return std::abs(cov.off);
  return 0.0;
}

}  // namespace lenqd
