// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/blocks.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lenqd {

namespace {

// floor(cbrt(v)) computed exactly: float cbrt as a guess, then integer
// adjustment. Safe for v up to ~4e12 (v fits a double exactly).
std::size_t floor_cbrt(std::uint64_t v) {
  auto cube = [](std::uint64_t c) { return c * c * c; };
  std::uint64_t c = static_cast<std::uint64_t>(
      std::llround(std::cbrt(static_cast<double>(v))));
  while (c > 0 && cube(c) > v) --c;
  while (cube(c + 1) <= v) ++c;
  return static_cast<std::size_t>(c);
}

double ols_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  const double count = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double range_sum(std::span<const double> x, const IndexRange& r, double inv_v) {
  double acc = 0.0;
  for (std::size_t i = r.first; i <= r.last && r.last >= r.first; ++i) {
    acc += x[i - 1] * inv_v;
  }
  return acc;
}

// Variance of the sum over a contiguous block of length len under the
// tridiagonal covariance.
double block_variance(std::size_t len, const TridiagCovariance& cov) {
  if (len == 0) return 0.0;
  return static_cast<double>(len) * cov.diag +
         2.0 * static_cast<double>(len - 1) * cov.off;
}

}  // namespace

BlockScheme block_scheme(std::size_t n) {
  if (n == 0) throw std::domain_error("block_scheme: n must be >= 1");
  BlockScheme scheme;
  scheme.n = n;
  const std::uint64_t n64 = n;
  scheme.big_len = floor_cbrt(n64 * n64);   // floor(n^(2/3))
  scheme.small_len = floor_cbrt(n64);       // floor(n^(1/3))
  scheme.count = n / (scheme.big_len + scheme.small_len);
  const std::size_t stride = scheme.big_len + scheme.small_len;
  for (std::size_t j = 0; j < scheme.count; ++j) {
    const std::size_t base = j * stride;
    scheme.big.push_back({base + 1, base + scheme.big_len});
    scheme.small.push_back({base + scheme.big_len + 1, base + stride});
  }
  scheme.remainder = {scheme.count * stride + 1, n};
  return scheme;
}

BlockSums block_sums(const BlockScheme& scheme, std::span<const double> x,
                     double v_n) {
  if (!(v_n > 0.0)) throw std::domain_error("block_sums: v_n must be positive");
  if (x.size() != scheme.n) {
    throw std::domain_error("block_sums: series length mismatch");
  }
  const double inv_v = 1.0 / v_n;
  BlockSums sums;
  sums.big.reserve(scheme.count);
  sums.small.reserve(scheme.count);
  for (std::size_t j = 0; j < scheme.count; ++j) {
    sums.big.push_back(range_sum(x, scheme.big[j], inv_v));
    sums.small.push_back(range_sum(x, scheme.small[j], inv_v));
    sums.big_total += sums.big.back();
    sums.small_total += sums.small.back();
  }
  sums.remainder = range_sum(x, scheme.remainder, inv_v);
  sums.remainder_total = sums.remainder;
  return sums;
}

BlockDiagnostics exact_variances(const BlockScheme& scheme,
                                 const TridiagCovariance& cov) {
  if (cov.n != scheme.n) {
    throw std::domain_error("exact_variances: covariance size mismatch");
  }
  BlockDiagnostics diag;
  diag.total_var = block_variance(scheme.n, cov);
  if (!(diag.total_var > 0.0)) {
    throw std::domain_error("exact_variances: total variance not positive");
  }
  double big_var = 0.0;
  for (std::size_t j = 0; j < scheme.count; ++j) {
    big_var += block_variance(scheme.big[j].size(), cov);
  }
  // Lag-one covariance reaches across blocks only when they are
  // index-adjacent, which alternating schemes with small_len >= 1 never are.
  double cross = 0.0;
  for (std::size_t i = 0; i + 1 < scheme.count; ++i) {
    if (scheme.big[i + 1].first == scheme.big[i].last + 1) cross += cov.off;
  }
  diag.big_var_ratio = big_var / diag.total_var;
  diag.cross_cov = cross / diag.total_var;
  diag.var_per_obs = diag.total_var / static_cast<double>(scheme.n);
  return diag;
}

DecayTable decay_diagnostics(const Ma1Params& params,
                             std::span<const std::size_t> ns, std::size_t reps,
                             std::uint64_t seed, int workers) {
  if (reps < 100) {
    throw std::domain_error("decay_diagnostics: reps must be >= 100");
  }
  DecayTable table;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const std::size_t n = ns[idx];
    if (idx > 0 && n <= ns[idx - 1]) {
      throw std::domain_error("decay_diagnostics: sample sizes must increase");
    }
    const BlockScheme scheme = block_scheme(n);
    const TridiagCovariance cov = ma1_covariance(params, n);
    const BlockDiagnostics diag = exact_variances(scheme, cov);
    const double v_n = std::sqrt(diag.total_var);
    const std::uint64_t level_seed = SplitStream::derive(seed, idx);

    // Per-replicate results land in their own slot, so the accumulation
    // order (and hence the result) is independent of the worker count.
    std::vector<double> sq_small(reps), sq_remainder(reps);
    auto replicate = [&](std::size_t r) {
      SplitStream stream = SplitStream::substream(level_seed, r);
      const std::vector<double> series = sample_ma1(params, n, stream);
      const BlockSums sums = block_sums(scheme, series, v_n);
      sq_small[r] = sums.small_total * sums.small_total;
      sq_remainder[r] = sums.remainder_total * sums.remainder_total;
    };
    if (workers == 1) {
      for (std::size_t r = 0; r < reps; ++r) replicate(r);
    } else {
#ifdef _OPENMP
      const int threads = workers > 1 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
      for (std::size_t r = 0; r < reps; ++r) replicate(r);
#else
      for (std::size_t r = 0; r < reps; ++r) replicate(r);
#endif
    }
    double mean_small = 0.0, mean_remainder = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      mean_small += sq_small[r];
      mean_remainder += sq_remainder[r];
    }
    mean_small /= static_cast<double>(reps);
    mean_remainder /= static_cast<double>(reps);
    table.rows.push_back(
        {n, std::abs(diag.big_var_ratio - 1.0), mean_small, mean_remainder});
  }

  bool fittable = table.rows.size() >= 2;
  for (const auto& row : table.rows) {
    fittable = fittable && row.s_sq_gap > 0.0 && row.mean_sq_small > 0.0 &&
               row.mean_sq_remainder > 0.0;
  }
  if (fittable) {
    std::vector<double> lx, gap, small, rem;
    for (const auto& row : table.rows) {
      lx.push_back(std::log(static_cast<double>(row.n)));
      gap.push_back(std::log(row.s_sq_gap));
      small.push_back(std::log(row.mean_sq_small));
      rem.push_back(std::log(row.mean_sq_remainder));
    }
    table.slope_s_sq_gap = ols_slope(lx, gap);
    table.slope_small = ols_slope(lx, small);
    table.slope_remainder = ols_slope(lx, rem);
  } else {
    table.slope_s_sq_gap = std::numeric_limits<double>::quiet_NaN();
    table.slope_small = std::numeric_limits<double>::quiet_NaN();
    table.slope_remainder = std::numeric_limits<double>::quiet_NaN();
  }
  return table;
}

}  // namespace lenqd
