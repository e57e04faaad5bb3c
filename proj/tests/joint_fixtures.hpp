// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
//
// Discrete-joint fixtures shared between the dependence unit tests and the
// acceptance suite.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "lenqd/enqd.hpp"
#include "lenqd/rng.hpp"

namespace fixtures {

inline lenqd::DiscreteJoint bernoulli_product() {
  return lenqd::DiscreteJoint::make(2, {{{0, 0}, 0.25},
                                        {{0, 1}, 0.25},
                                        {{1, 0}, 0.25},
                                        {{1, 1}, 0.25}});
}

inline lenqd::DiscreteJoint comonotone_bernoulli() {
  return lenqd::DiscreteJoint::make(2, {{{0, 0}, 0.5}, {{1, 1}, 0.5}});
}

inline lenqd::DiscreteJoint antithetic_bernoulli() {
  return lenqd::DiscreteJoint::make(2, {{{0, 1}, 0.5}, {{1, 0}, 0.5}});
}

// Consecutive MA(1) values (W_1 - b W_0, W_2 - b W_1) with each innovation
// discretized to the moment-matched three-point law {-sqrt(3)s, 0, sqrt(3)s}
// at masses {1/6, 2/3, 1/6}.
inline lenqd::DiscreteJoint ma1_pair_discretized(double b, double s) {
  const double points[3] = {-std::sqrt(3.0) * s, 0.0, std::sqrt(3.0) * s};
  const double masses[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
  std::vector<lenqd::DiscreteJoint::Atom> atoms;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        atoms.push_back(
            {{points[j] - b * points[i], points[k] - b * points[j]},
             masses[i] * masses[j] * masses[k]});
      }
    }
  }
  return lenqd::DiscreteJoint::make(2, std::move(atoms));
}

// Joint on a product grid of `levels` values per coordinate. With
// product_masses the coordinates are independent by construction; otherwise
// every atom gets its own random mass, giving an arbitrary dependence.
inline lenqd::DiscreteJoint random_product_joint(lenqd::SplitStream& rng,
                                                 std::size_t dim,
                                                 std::size_t levels,
                                                 bool product_masses) {
  std::vector<std::vector<double>> values(dim);
  std::vector<std::vector<double>> marginals(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    double base = -1.0 + 2.0 * rng.next_uniform();
    double total = 0.0;
    for (std::size_t l = 0; l < levels; ++l) {
      values[c].push_back(base);
      base += 0.2 + rng.next_uniform();
      marginals[c].push_back(0.1 + rng.next_uniform());
      total += marginals[c].back();
    }
    for (auto& m : marginals[c]) m /= total;
  }
  std::vector<lenqd::DiscreteJoint::Atom> atoms;
  std::vector<std::size_t> idx(dim, 0);
  double total = 0.0;
  while (true) {
    lenqd::DiscreteJoint::Atom atom;
    atom.mass = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
      atom.point.push_back(values[c][idx[c]]);
      atom.mass *= marginals[c][idx[c]];
    }
    if (!product_masses) atom.mass = rng.next_uniform();
    total += atom.mass;
    atoms.push_back(std::move(atom));
    std::size_t c = 0;
    while (c < dim && ++idx[c] == levels) idx[c++] = 0;
    if (c == dim) break;
  }
  for (auto& a : atoms) a.mass /= total;
  return lenqd::DiscreteJoint::make(dim, std::move(atoms));
}

inline lenqd::DiscreteJoint apply_common_map(
    const lenqd::DiscreteJoint& joint,
    const std::function<double(double)>& map) {
  std::vector<lenqd::DiscreteJoint::Atom> atoms = joint.atoms;
  for (auto& a : atoms) {
    for (auto& v : a.point) v = map(v);
  }
  return lenqd::DiscreteJoint::make(joint.dim, std::move(atoms));
}

inline const std::vector<std::function<double(double)>>& monotone_maps() {
  static const std::vector<std::function<double(double)>> maps = {
      [](double t) { return t * t * t; },
      [](double t) { return std::tanh(t); },
      [](double t) { return std::exp(t); },
      [](double t) { return 2.0 * t + 1.0; },
      [](double t) { return t < 0.4 ? t : t + 2.0; },
      [](double t) { return std::min(t, 0.8); },
  };
  return maps;
}

}  // namespace fixtures
