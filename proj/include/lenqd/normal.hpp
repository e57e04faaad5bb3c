// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace lenqd {

// Density of the standard normal distribution.
double std_normal_pdf(double x);

// Distribution function of the standard normal, Phi(x), via the
// complementary error function. Absolute error below 1e-12 over the
// whole real line. Throws std::domain_error on non-finite input.
double std_normal_cdf(double x);

// Inverse of std_normal_cdf on (0, 1): a rational initial guess refined
// by two Newton steps, so that |Phi(quantile(p)) - p| <= 1e-10.
// Throws std::domain_error unless 0 < p < 1.
double std_normal_quantile(double p);

}  // namespace lenqd
