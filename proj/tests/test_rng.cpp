// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lenqd/rng.hpp"

using lenqd::SplitStream;

TEST_CASE("streams are deterministic in the key") {
  SplitStream a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    any_diff = any_diff || va != c.next_u64();
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("substreams are independent of construction order") {
  SplitStream late = SplitStream::substream(7, 5);
  SplitStream early = SplitStream::substream(7, 5);
  SplitStream other = SplitStream::substream(7, 6);
  CHECK(early.next_u64() == late.next_u64());
  CHECK(SplitStream::derive(7, 5) != SplitStream::derive(7, 6));
  CHECK(early.next_u64() != other.next_u64());
}

TEST_CASE("uniforms stay strictly inside the unit interval") {
  SplitStream s(1);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    mean += u;
  }
  mean /= 100000.0;
  CHECK(std::abs(mean - 0.5) < 0.005);
}

TEST_CASE("normal draws have the requested moments") {
  SplitStream s(2);
  const int n = 100000;
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = s.next_normal(1.5, 0.7);
    mean += v;
    sq += v * v;
  }
  mean /= n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean - 1.5) < 0.01);
  CHECK(std::abs(std::sqrt(var) - 0.7) < 0.01);
}

TEST_CASE("centered uniform has the requested moments and support") {
  SplitStream s(3);
  const int n = 100000;
  const double sd = 0.7;
  const double half_width = sd * std::sqrt(3.0);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = s.next_centered_uniform(0.0, sd);
    CHECK(std::abs(v) <= half_width * (1.0 + 1e-12));
    mean += v;
    sq += v * v;
  }
  mean /= n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(std::sqrt(var) - sd) < 0.01);
}
