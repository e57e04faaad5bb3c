// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lenqd/blocks.hpp"
#include "lenqd/inequalities.hpp"
#include "lenqd/montecarlo.hpp"
#include "lenqd/wavelet.hpp"

namespace lenqd {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// Flat report rows: "n,f,x,M,seed,error". The f and x fields are empty for
// the raw-sum experiment, which has neither a regression function nor an
// evaluation point.
void write_reports_csv(std::ostream& out,
                       std::span<const BerryEsseenReport> reports,
                       bool wavelet);

// "theoretical,empirical" rows.
void write_qq_csv(std::ostream& out, std::span<const QqPoint> qq);

// "i,w" rows, i starting at 1.
void write_weights_csv(std::ostream& out, const WaveletWeights& weights);

// "n,bias,reference" rows.
void write_bias_csv(std::ostream& out, const BiasCurve& curve);

// "n,abs_sn2_minus_1,mean_sq_sigma2,mean_sq_sigma3" rows.
void write_decay_csv(std::ostream& out, const DecayTable& table);

// "name,params,lhs,rhs,slack,holds" rows.
void write_inequalities_csv(std::ostream& out,
                            std::span<const InequalityReport> reports);

}  // namespace lenqd
