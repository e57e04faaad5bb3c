// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace lenqd {

// Finite discrete joint distribution on R^d, the substrate on which the
// dependence checkers run exact enumerations. Atom masses must be
// nonnegative and sum to 1 within 1e-12; at most 10^4 atoms.
struct DiscreteJoint {
  struct Atom {
    std::vector<double> point;
    double mass;
  };

  std::size_t dim = 0;
  std::vector<Atom> atoms;

  // Validates and returns the joint; throws std::domain_error on bad input.
  static DiscreteJoint make(std::size_t dim, std::vector<Atom> atoms);
};

// Reads rows "x1,...,xd,mass". The dimension is inferred from the first
// data row; a leading non-numeric line is treated as a header and skipped.
// With normalize = true the masses are rescaled to sum to one.
DiscreteJoint joint_from_csv(std::istream& in, bool normalize = false);

// Smallest constant M >= 1 such that
//   P(X <= x, Y <= y) <= M P(X <= x) P(Y <= y) and
//   P(X > x,  Y > y)  <= M P(X > x)  P(Y > y)
// hold at every threshold pair. witness is a pair where the binding ratio
// is attained. value is +infinity when a positive joint probability sits
// over a zero product (cannot happen for orthants of a proper joint, but
// the flag is kept for safety).
struct DominatingConstant {
  double value = 1.0;
  std::vector<double> witness;
};

// Exact minimal dominating constant of a bivariate discrete joint. The
// orthant probabilities are piecewise constant between atom coordinates, so
// scanning the atom-coordinate grid realizes the supremum exactly.
// Throws std::domain_error on empty input or dim != 2, std::length_error
// when the threshold grid would be too large to enumerate.
DominatingConstant enqd_min_constant(const DiscreteJoint& joint);

// Lower bound on the dominating constant over linear combinations: for every
// pair of disjoint nonempty index sets (A, B), every sign, and every
// coefficient vector with entries from {1/g, ..., g/g}, pushes the joint
// forward to (sum_A r_k X_k, sum_B r_j X_j) and takes the worst
// enqd_min_constant. Exact in the limit of a dense coefficient grid.
// dim must be in [2, 6]; capacity violations raise std::length_error.
DominatingConstant lenqd_min_constant(const DiscreteJoint& joint,
                                      int coeff_grid);

}  // namespace lenqd
