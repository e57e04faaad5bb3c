// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/csv.hpp"

#include <charconv>
#include <ostream>

namespace lenqd {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_reports_csv(std::ostream& out,
                       std::span<const BerryEsseenReport> reports,
                       bool wavelet) {
  out << "n,f,x,M,seed,error\n";
  for (const auto& r : reports) {
    out << r.n << ',';
    if (wavelet) out << to_string(r.f);
    out << ',';
    if (wavelet) out << format_double(r.x_eval);
    out << ',' << r.reps << ',' << r.seed << ',' << format_double(r.delta)
        << '\n';
  }
}

void write_qq_csv(std::ostream& out, std::span<const QqPoint> qq) {
  out << "theoretical,empirical\n";
  for (const auto& p : qq) {
    out << format_double(p.theoretical) << ',' << format_double(p.empirical)
        << '\n';
  }
}

void write_weights_csv(std::ostream& out, const WaveletWeights& weights) {
  out << "i,w\n";
  for (std::size_t i = 0; i < weights.w.size(); ++i) {
    out << i + 1 << ',' << format_double(weights.w[i]) << '\n';
  }
}

void write_bias_csv(std::ostream& out, const BiasCurve& curve) {
  out << "n,bias,reference\n";
  for (const auto& p : curve.points) {
    out << p.n << ',' << format_double(p.sup_bias) << ','
        << format_double(p.reference) << '\n';
  }
}

void write_decay_csv(std::ostream& out, const DecayTable& table) {
  out << "n,abs_sn2_minus_1,mean_sq_sigma2,mean_sq_sigma3\n";
  for (const auto& row : table.rows) {
    out << row.n << ',' << format_double(row.s_sq_gap) << ','
        << format_double(row.mean_sq_small) << ','
        << format_double(row.mean_sq_remainder) << '\n';
  }
}

void write_inequalities_csv(std::ostream& out,
                            std::span<const InequalityReport> reports) {
  out << "name,params,lhs,rhs,slack,holds\n";
  for (const auto& r : reports) {
    out << r.name << ',' << r.params << ',' << format_double(r.lhs) << ','
        << format_double(r.rhs) << ',' << format_double(r.slack) << ','
        << (r.holds ? "true" : "false") << '\n';
  }
}

}  // namespace lenqd
