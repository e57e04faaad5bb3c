// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lenqd/ma1.hpp"

namespace lenqd {

// One numerically verified inequality: holds <=> lhs <= rhs + 1e-12.
struct InequalityReport {
  std::string name;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
};

// Smoothing inequality instantiated with X standard normal and Y a
// deterministic shift delta, where every term is closed-form:
//   sup_u |Phi(u - delta) - Phi(u)| <= a / sqrt(2 pi) + 1{delta > a}.
// The left side is maximized on a grid over [-10, 10] with step 1e-3
// (grid maxima undershoot the true supremum, never overshoot).
// delta and a must be positive.
InequalityReport check_smoothing(double delta, double a);

// Characteristic-function factorization bound for the Gaussian MA(1) sum,
// where both sides are closed-form:
//   |E exp(it S_n) - prod_m E exp(it X_m)|
//     = |exp(-t^2 V/2) - exp(-t^2 n diag / 2)|
//    <= 2 t^2 (n-1) |off|.
// n is capped at 64.
InequalityReport check_charfn_bound(const Ma1Params& params, std::size_t n,
                                    double t);

// Scale perturbation bound for the normal distribution function:
//   sup_x |Phi(a x) - Phi(x)| <= (|a - 1| + |1/a - 1|) / (e sqrt(2 pi)),
// left side maximized on a grid over [-10, 10] with step 1e-4. a > 0.
InequalityReport check_phi_scale(double a);

// Moment-bracket probe: Monte Carlo estimate of E|S_n|^p against
//   sum_i E|X_i|^p + (sum_i E X_i^2)^(p/2)
// with exact Gaussian moments. The multiplicative constant in front of the
// bracket is existential, so only the ratio is reported, never asserted.
// p must be 2, 3 or 4; reps >= 1000.
struct RosenthalProbe {
  double empirical_lhs = 0.0;
  double bracket = 0.0;
  double ratio = 0.0;
};

RosenthalProbe probe_rosenthal(const Ma1Params& params, std::size_t n, int p,
                               std::size_t reps, std::uint64_t seed);

// The documented verification grids, all in one batch:
//   smoothing on a 20x20 grid over (0, 1]^2,
//   charfn on coeff {0.1..0.9} x n {2..64} x t {0.1..5},
//   phi_scale on 60 log-spaced points in [0.1, 10].
std::vector<InequalityReport> default_inequality_grid();

}  // namespace lenqd
