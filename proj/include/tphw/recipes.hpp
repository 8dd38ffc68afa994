// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tphw/optimize.hpp"
#include "tphw/weave.hpp"

namespace tphw::recipes {

/// Three axis-aligned helices on a primitive lattice: one z helix at
/// (x0, y0) and its images under (x,y,z) -> (z,x,y). Lengths in units of L.
struct Simple100 {
  double x0 = 0.5;
  double y0 = 0.0;
  double radius = 0.2;
  double phase = 0.0;
  int handedness = 1;
  double tube_radius = 0.0;
  int turns = 1;
};
std::vector<HelixSpec> simple100(const Simple100& p, double L = 1.0);

/// Two enantiomorphic networks of helices wound on the gyroid channel axes,
/// one helix per axis direction per network, on a body-centred lattice.
/// phase = 0 puts network A through the vertices of its Laves graph when
/// radius = sqrt(2)/8.
struct Laves100 {
  double radius = 0.2;
  double phase = 0.0;
  double tube_radius = 0.0;
  int turns = 1;
};
std::vector<HelixSpec> laves100(const Laves100& p, double L = 1.0);
/// Helices 0..2 form network A, 3..5 its inversion image.
SymmetryConstraint laves100_constraint();

/// Helices on all twelve gyroid channel axes of the conventional cell:
/// right-handed on the g = +1 channels, left-handed on g = -1.
struct Gyroid100 {
  double radius = 0.2;
  double phase = 0.0;
  double tube_radius = 0.0;
  int turns = 1;
};
std::vector<HelixSpec> gyroid100(const Gyroid100& p, double L = 1.0);

/// Channel axis lines of the gyroid approximant along z, with the sign of
/// g on each line, in units of L.
struct ChannelLine {
  double x, y;
  int sign;
};
std::vector<ChannelLine> gyroid_z_channels();

/// The six right-handed helices of gyroid100 (the g = +1 channels).
std::vector<HelixSpec> tetra100(const Gyroid100& p, double L = 1.0);

/// One body-diagonal axis line: anchor in units of L, direction index into
/// family_directions(Fam111).
struct AxisLine111 {
  Vec3 anchor;
  int direction = 0;
  int handedness = 1;
};

/// `helices_per_axis` coaxial helices with equally spaced phases on every
/// line, on a primitive lattice.
struct Axial111 {
  std::vector<AxisLine111> lines;
  double radius = 0.1;
  double phase = 0.0;
  int helices_per_axis = 1;
  double tube_radius = 0.0;
  int turns = 1;
};
std::vector<HelixSpec> axial111(const Axial111& p, double L = 1.0);

}  // namespace tphw::recipes
