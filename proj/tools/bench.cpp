// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference path (--parallel 1) against the OpenMP
// kernel on the replicate loops and checks that both produce identical
// reports.
#include <chrono>
#include <cstdio>
#include <vector>

#include "lenqd/blocks.hpp"
#include "lenqd/montecarlo.hpp"

namespace {

template <typename F>
double seconds(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
  lenqd::SimulationConfig cfg;
  cfg.n = 500;
  cfg.reps = 20000;
  cfg.master_seed = 1;

  lenqd::BerryEsseenReport serial_report, parallel_report;
  cfg.workers = 1;
  const double t_serial =
      seconds([&] { serial_report = lenqd::run_wavelet_experiment(cfg); });
  cfg.workers = 0;
  const double t_parallel =
      seconds([&] { parallel_report = lenqd::run_wavelet_experiment(cfg); });
  std::printf("wavelet  n=%zu M=%zu  serial %.3fs  parallel %.3fs  (x%.2f)\n",
              cfg.n, cfg.reps, t_serial, t_parallel, t_serial / t_parallel);
  if (serial_report.delta != parallel_report.delta) {
    std::printf("MISMATCH: serial and parallel deltas differ\n");
    return 1;
  }

  const lenqd::Ma1Params params{0.9, 0.7, 0.0};
  const std::vector<std::size_t> ns{1000, 10000};
  lenqd::DecayTable serial_table, parallel_table;
  const double t_serial_blocks = seconds(
      [&] { serial_table = lenqd::decay_diagnostics(params, ns, 500, 1, 1); });
  const double t_parallel_blocks = seconds(
      [&] { parallel_table = lenqd::decay_diagnostics(params, ns, 500, 1, 0); });
  std::printf("blocks   reps=500        serial %.3fs  parallel %.3fs  (x%.2f)\n",
              t_serial_blocks, t_parallel_blocks,
              t_serial_blocks / t_parallel_blocks);
  for (std::size_t i = 0; i < serial_table.rows.size(); ++i) {
    if (serial_table.rows[i].mean_sq_small !=
        parallel_table.rows[i].mean_sq_small) {
      std::printf("MISMATCH: decay tables differ at row %zu\n", i);
      return 1;
    }
  }
  std::printf("serial and parallel outputs are identical\n");
  return 0;
}
