// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lenqd/rng.hpp"

namespace lenqd {

// First-order moving average X_i = W_i - coeff * W_{i-1} with i.i.d.
// innovations W of the given mean and standard deviation. With
// coeff = 0.9, innovation_sd = 0.7, innovation_mean = 0 this is the
// negatively dependent error model used throughout the experiments.
struct Ma1Params {
  double coeff = 0.9;
  double innovation_sd = 0.7;
  double innovation_mean = 0.0;
};

// Innovation law for the sampler. Gaussian innovations make every linear
// statistic exactly normal; the centered-uniform option exists so genuinely
// non-normal sampling distributions can be observed.
enum class Innovations { gaussian, uniform };

// Covariance of a stationary MA(1) series: diag on the main diagonal,
// off at lag one, zero beyond. diag >= 2*|off| guarantees positive
// semidefiniteness and is enforced at construction.
struct TridiagCovariance {
  TridiagCovariance(std::size_t n, double diag, double off);

  std::size_t n;
  double diag;
  double off;
};

// Exact covariance of the MA(1) model: diag = (1 + coeff^2) * sd^2,
// off = -coeff * sd^2. n = 0 is a domain error.
TridiagCovariance ma1_covariance(const Ma1Params& params, std::size_t n);

// Draws n + 1 innovations W_0..W_n from the stream and returns
// X_i = W_i - coeff * W_{i-1} for i = 1..n. Deterministic given the stream
// key; the stream is advanced by exactly n + 1 variates.
std::vector<double> sample_ma1(const Ma1Params& params, std::size_t n,
                               SplitStream& stream,
                               Innovations innovations = Innovations::gaussian);

// Convenience overload seeding a fresh stream.
std::vector<double> sample_ma1(const Ma1Params& params, std::size_t n,
                               std::uint64_t seed,
                               Innovations innovations = Innovations::gaussian);

// Sum of |Cov(X_1, X_j)| over j >= max(m, 2). Under the tridiagonal model
// this is |off| for m <= 2 and 0 beyond; it is the tail-sum diagnostic for
// long-range dependence conditions, reported rather than asserted.
double covariance_tail_sum(const TridiagCovariance& cov, std::size_t m);

}  // namespace lenqd
