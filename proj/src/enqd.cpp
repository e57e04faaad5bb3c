// Copyright (c) 2026 lenqd contributors
// SPDX-License-Identifier: Apache-2.0
#include "lenqd/enqd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lenqd {

namespace {

constexpr std::size_t kMaxAtoms = 10000;
constexpr std::size_t kMaxGridCells = 20000000;
constexpr double kMassTol = 1e-12;

struct WeightedPoint {
  double x;
  double y;
  double mass;
};

// Exact minimal dominating constant of a weighted bivariate point set.
// Orthant probabilities are piecewise constant between atom coordinates,
// so the supremum over R^2 is realized on the atom-coordinate grid.
DominatingConstant min_constant_2d(const std::vector<WeightedPoint>& pts) {
  std::vector<double> xs(pts.size()), ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].y;
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const std::size_t gx = xs.size();
  const std::size_t gy = ys.size();
  if (gx * gy > kMaxGridCells) {
    throw std::length_error("enqd_min_constant: threshold grid too large");
  }

  // Lower orthants by prefix sums, upper orthants by strict suffix sums,
  // each computed with additions of nonnegative masses only. An empty
  // orthant therefore comes out exactly zero and 0/0 thresholds are
  // recognized without cancellation noise.
  std::vector<double> mass(gx * gy, 0.0);
  for (const auto& p : pts) {
    const std::size_t ix =
        std::lower_bound(xs.begin(), xs.end(), p.x) - xs.begin();
    const std::size_t iy =
        std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin();
    mass[ix * gy + iy] += p.mass;
  }

  std::vector<double> cdf = mass;
  for (std::size_t ix = 0; ix < gx; ++ix) {
    for (std::size_t iy = 1; iy < gy; ++iy) {
      cdf[ix * gy + iy] += cdf[ix * gy + iy - 1];
    }
  }
  for (std::size_t ix = 1; ix < gx; ++ix) {
    for (std::size_t iy = 0; iy < gy; ++iy) {
      cdf[ix * gy + iy] += cdf[(ix - 1) * gy + iy];
    }
  }

  std::vector<double> suffix = mass;  // becomes the inclusive 2-d suffix sum
  for (std::size_t ix = 0; ix < gx; ++ix) {
    for (std::size_t iy = gy - 1; iy-- > 0;) {
      suffix[ix * gy + iy] += suffix[ix * gy + iy + 1];
    }
  }
  for (std::size_t iy = 0; iy < gy; ++iy) {
    for (std::size_t ix = gx - 1; ix-- > 0;) {
      suffix[ix * gy + iy] += suffix[(ix + 1) * gy + iy];
    }
  }
  auto upper = [&](std::size_t ix, std::size_t iy) {  // P(X > x, Y > y)
    return (ix + 1 < gx && iy + 1 < gy) ? suffix[(ix + 1) * gy + iy + 1] : 0.0;
  };

  std::vector<double> sx_of(gx, 0.0), sy_of(gy, 0.0);  // marginal survivals
  for (std::size_t ix = 0; ix < gx; ++ix) {
    sx_of[ix] = ix + 1 < gx ? suffix[(ix + 1) * gy] : 0.0;
  }
  for (std::size_t iy = 0; iy < gy; ++iy) {
    sy_of[iy] = iy + 1 < gy ? suffix[iy + 1] : 0.0;
  }

  DominatingConstant result;
  result.value = 1.0;
  result.witness = {xs[0], ys[0]};
  double best = -1.0;

  auto consider = [&](double joint, double prod, double wx, double wy) {
    double ratio;
    if (prod > 0.0) {
      ratio = joint / prod;
    } else if (joint > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    } else {
      return;  // 0/0: no constraint at this threshold
    }
    if (ratio > best) {
      best = ratio;
      result.witness = {wx, wy};
    }
  };

  for (std::size_t ix = 0; ix < gx; ++ix) {
    const double fx = cdf[ix * gy + gy - 1];
    for (std::size_t iy = 0; iy < gy; ++iy) {
      const double fy = cdf[(gx - 1) * gy + iy];
      consider(cdf[ix * gy + iy], fx * fy, xs[ix], ys[iy]);
      consider(upper(ix, iy), sx_of[ix] * sy_of[iy], xs[ix], ys[iy]);
    }
  }

  result.value = std::max(1.0, best);
  return result;
}

}  // namespace

DiscreteJoint DiscreteJoint::make(std::size_t dim, std::vector<Atom> atoms) {
  if (dim == 0) throw std::domain_error("DiscreteJoint: dimension must be >= 1");
  if (atoms.empty()) throw std::domain_error("DiscreteJoint: empty joint");
  if (atoms.size() > kMaxAtoms) {
    throw std::length_error("DiscreteJoint: more than 10^4 atoms");
  }
  double total = 0.0;
  for (const auto& a : atoms) {
    if (a.point.size() != dim) {
      throw std::domain_error("DiscreteJoint: atom dimension mismatch");
    }
    if (!(a.mass >= 0.0)) {
      throw std::domain_error("DiscreteJoint: negative atom mass");
    }
    total += a.mass;
  }
  if (std::abs(total - 1.0) > kMassTol) {
    throw std::domain_error("DiscreteJoint: masses must sum to 1 (+-1e-12)");
  }
  DiscreteJoint joint;
  joint.dim = dim;
  joint.atoms = std::move(atoms);
  return joint;
}

DiscreteJoint joint_from_csv(std::istream& in, bool normalize) {
  std::vector<DiscreteJoint::Atom> atoms;
  std::size_t dim = 0;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream row(line);
    std::string cell;
    bool parse_ok = true;
    while (std::getline(row, cell, ',')) {
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
      if (end == cell.c_str() || (end && *end != '\0')) {
        parse_ok = false;
        break;
      }
      fields.push_back(v);
    }
    if (!parse_ok) {
      if (first) {  // header line
        first = false;
        continue;
      }
      throw std::domain_error("joint_from_csv: malformed row: " + line);
    }
    first = false;
    if (fields.size() < 2) {
      throw std::domain_error("joint_from_csv: rows need x1,...,xd,mass");
    }
    if (dim == 0) {
      dim = fields.size() - 1;
    } else if (fields.size() != dim + 1) {
      throw std::domain_error("joint_from_csv: inconsistent column count");
    }
    DiscreteJoint::Atom atom;
    atom.mass = fields.back();
    fields.pop_back();
    atom.point = std::move(fields);
    atoms.push_back(std::move(atom));
  }
  if (atoms.empty()) throw std::domain_error("joint_from_csv: no data rows");
  if (normalize) {
    double total = 0.0;
    for (const auto& a : atoms) total += a.mass;
    if (!(total > 0.0)) {
      throw std::domain_error("joint_from_csv: total mass not positive");
    }
    for (auto& a : atoms) a.mass /= total;
  }
  return DiscreteJoint::make(dim, std::move(atoms));
}

DominatingConstant enqd_min_constant(const DiscreteJoint& joint) {
  if (joint.dim != 2) {
    throw std::domain_error("enqd_min_constant: joint must be bivariate");
  }
  if (joint.atoms.empty()) {
    throw std::domain_error("enqd_min_constant: empty joint");
  }
  std::vector<WeightedPoint> pts;
  pts.reserve(joint.atoms.size());
  for (const auto& a : joint.atoms) {
    pts.push_back({a.point[0], a.point[1], a.mass});
  }
  return min_constant_2d(pts);
}

DominatingConstant lenqd_min_constant(const DiscreteJoint& joint,
                                      int coeff_grid) {
  const std::size_t d = joint.dim;
  if (d < 2 || d > 6) {
    throw std::length_error("lenqd_min_constant: dimension must be in [2, 6]");
  }
  if (coeff_grid < 1) {
    throw std::domain_error("lenqd_min_constant: coeff_grid must be >= 1");
  }

  DominatingConstant best;
  best.value = 1.0;

  const unsigned full = (1u << d) - 1u;
  std::vector<WeightedPoint> pts(joint.atoms.size());
  std::vector<double> coeff(d, 0.0);

  for (unsigned a = 1; a <= full; ++a) {
    const unsigned rest = full & ~a;
    // Enumerate nonempty submasks b of the complement; a < b makes each
    // unordered pair appear once.
    for (unsigned b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < d; ++j) {
        if ((a >> j & 1u) || (b >> j & 1u)) members.push_back(j);
      }
      const std::size_t m = members.size();
      std::size_t combos = 1;
      for (std::size_t j = 0; j < m; ++j) {
        combos *= static_cast<std::size_t>(coeff_grid);
        if (combos * joint.atoms.size() > 50000000) {
          throw std::length_error(
              "lenqd_min_constant: coefficient grid too large for this "
              "joint");
        }
      }
      for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t rem = combo;
        for (std::size_t j = 0; j < m; ++j) {
          coeff[members[j]] =
              static_cast<double>(rem % coeff_grid + 1) / coeff_grid;
          rem /= coeff_grid;
        }
        for (double sign : {1.0, -1.0}) {
          for (std::size_t i = 0; i < joint.atoms.size(); ++i) {
            const auto& atom = joint.atoms[i];
            double u = 0.0, v = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
              if (a >> j & 1u) u += coeff[j] * atom.point[j];
              if (b >> j & 1u) v += coeff[j] * atom.point[j];
            }
            pts[i] = {sign * u, sign * v, atom.mass};
          }
          DominatingConstant candidate = min_constant_2d(pts);
          if (candidate.value > best.value || best.witness.empty()) {
            best = std::move(candidate);
          }
        }
      }
    }
  }
  return best;
}

}  // namespace lenqd
