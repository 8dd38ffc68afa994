// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "tphw/helix.hpp"
#include "tphw/weave.hpp"

namespace tphw {

inline constexpr int kDefaultGridN = 96;

/// Closest approach between P1(s) and P2(t) + translation.
struct DistanceWitness {
  double distance = 0.0;
  double s = 0.0;
  double t = 0.0;
  Vec3 translation;
  /// Minimum attained on a continuum (singular Hessian), e.g. parallel rods.
  bool non_isolated = false;
};

/// Local minimum of the pairwise gap between helix i and an image of helix j.
struct Contact {
  std::size_t helix_i = 0;
  std::size_t helix_j = 0;
  DistanceWitness witness;
  double gap = 0.0;
  Vec3 midpoint;
};

struct ClearanceReport {
  double min_gap = 0.0;
  DistanceWitness witness;
  std::size_t pair_i = 0;
  std::size_t pair_j = 0;
  std::size_t pair_count_evaluated = 0;
  /// Pair minima attaining min_gap (within 1e-9).
  std::vector<Contact> contacts;
};

/// Global minimum of |P1(s) - P2(t) - T| over both curves and all lattice
/// translations T. Coarse grid of grid_n samples per turn, every grid local
/// minimum polished by damped Newton on the squared distance (golden-section
/// fallback). Throws IncommensurateHelix, InvalidArgument for grid_n < 16.
DistanceWitness pair_min_distance(const HelixSpec& h1, const HelixSpec& h2, const Lattice& lattice,
                                  int grid_n = kDefaultGridN);

/// All polished local minima with distance <= max_distance, parameters
/// reduced to s in [0, 2pi k1), t in [0, 2pi k2). With exclude_self, the
/// translations that map h2 onto h1 are skipped (h1 and h2 must be the same
/// curve for this to be meaningful).
std::vector<DistanceWitness> pair_local_minima(const HelixSpec& h1, const HelixSpec& h2,
                                               const Lattice& lattice, double max_distance,
                                               int grid_n = kDefaultGridN,
                                               bool exclude_self = false);

/// Minimum distance between a helix and its lattice images, excluding the
/// translations that map the curve onto itself.
DistanceWitness self_min_distance(const HelixSpec& h, const Lattice& lattice,
                                  int grid_n = kDefaultGridN);

/// Global tube-to-tube gap over every unordered pair, self-image pairs
/// included. Ties broken by (pair indices, translation).
ClearanceReport clearance(const WeaveSpec& w, int grid_n = kDefaultGridN);

/// Minimum centerline distance over all pairs; the tube radii are ignored.
double min_centerline_distance(const WeaveSpec& w, int grid_n = kDefaultGridN);

/// Every local minimum of a pairwise gap with gap <= gap_tol, once per
/// unordered pair per periodic unit.
std::vector<Contact> find_contacts(const WeaveSpec& w, double gap_tol, int grid_n = kDefaultGridN);

}  // namespace tphw
