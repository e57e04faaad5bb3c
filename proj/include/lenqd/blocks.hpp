// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lenqd/ma1.hpp"

namespace lenqd {

// 1-based inclusive index interval; empty when first > last.
struct IndexRange {
  std::size_t first = 1;
  std::size_t last = 0;

  std::size_t size() const { return last >= first ? last - first + 1 : 0; }
};

// Alternating big/small block partition of {1..n}:
//   big length   p = floor(n^(2/3)),
//   small length q = floor(n^(1/3)),
//   block count  k = floor(n / (p + q)),
// big block j covering j(p+q)+1 .. j(p+q)+p, the small block right after it,
// and the remainder k(p+q)+1 .. n. The three groups are disjoint and cover
// {1..n} exactly.
struct BlockScheme {
  std::size_t n = 0;
  std::size_t big_len = 0;    // p
  std::size_t small_len = 0;  // q
  std::size_t count = 0;      // k
  std::vector<IndexRange> big;
  std::vector<IndexRange> small;
  IndexRange remainder;
};

BlockScheme block_scheme(std::size_t n);

// Per-block sums of the standardized series x_i / v_n, plus the three group
// totals whose sum reproduces sum(x)/v_n to rounding.
struct BlockSums {
  std::vector<double> big;
  std::vector<double> small;
  double remainder = 0.0;
  double big_total = 0.0;
  double small_total = 0.0;
  double remainder_total = 0.0;
};

// v_n must be positive (std::domain_error otherwise); x must have length n.
BlockSums block_sums(const BlockScheme& scheme, std::span<const double> x,
                     double v_n);

// Closed-form second-moment diagnostics of the block decomposition under a
// tridiagonal covariance. A contiguous block of length L has variance
// L*diag + 2(L-1)*off; two blocks covary only when index-adjacent.
struct BlockDiagnostics {
  double big_var_ratio = 0.0;     // sum_j Var(big_j) / Var(S_n)
  double cross_cov = 0.0;         // sum_{i<j} Cov(big_i, big_j) / Var(S_n)
  double total_var = 0.0;         // Var(S_n)
  double var_per_obs = 0.0;       // Var(S_n) / n
};

BlockDiagnostics exact_variances(const BlockScheme& scheme,
                                 const TridiagCovariance& cov);

struct DecayRow {
  std::size_t n;
  double s_sq_gap;            // |sum Var(big)/Var(S) - 1|, exact
  double mean_sq_small;       // Monte Carlo mean of (small-block total)^2
  double mean_sq_remainder;   // Monte Carlo mean of (remainder total)^2
};

struct DecayTable {
  std::vector<DecayRow> rows;
  double slope_s_sq_gap = 0.0;  // OLS slopes of log value on log n
  double slope_small = 0.0;
  double slope_remainder = 0.0;
};

// Empirical decay of the negligible parts of the decomposition for the
// Gaussian MA(1) model, one row per sample size. Replicates are independent
// substreams of the seed; results do not depend on the worker count
// (workers = 1 forces the serial reference path, 0 uses all cores).
DecayTable decay_diagnostics(const Ma1Params& params,
                             std::span<const std::size_t> ns, std::size_t reps,
                             std::uint64_t seed, int workers = 0);

}  // namespace lenqd
