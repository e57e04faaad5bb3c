// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "lenqd/normal.hpp"

namespace lenqd {

// Counter-based splittable pseudorandom stream.
//
// Output i of a stream with key k is mix64(k + (i+1)*GAMMA), the SplitMix64
// finalizer applied to a Weyl sequence. Substreams are derived by hashing
// (master, index), so replicate r of a simulation can seed its own stream in
// O(1) without touching any shared state. This is what makes experiment
// results independent of how replicates are scheduled across threads.
class SplitStream {
 public:
  explicit SplitStream(std::uint64_t key) : key_(key) {}

  // Key of substream `index` of stream `master`.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * kGamma);
  }

  static SplitStream substream(std::uint64_t master, std::uint64_t index) {
    return SplitStream(derive(master, index));
  }

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

  // Uniform on the open interval (0, 1); never returns 0 or 1, so it can
  // feed the normal quantile directly.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal(double mean, double sd) {
    return mean + sd * std_normal_quantile(next_uniform());
  }

  // Uniform with the given mean and standard deviation.
  double next_centered_uniform(double mean, double sd) {
    // sqrt(12) rescales a unit-interval uniform to unit variance.
    return mean + sd * 3.4641016151377544 * (next_uniform() - 0.5);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lenqd
