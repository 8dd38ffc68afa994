// SPDX-License-Identifier: Apache-2.0
#include "tphw/recipes.hpp"

#include <cmath>
#include <numbers>

#include "tphw/error.hpp"

namespace tphw::recipes {
namespace {

void check_turns(int turns) {
  if (turns < 1) throw Error(ErrorKind::IncommensurateHelix, "turns per repeat must be >= 1");
}

std::vector<HelixSpec> with_cyclic_images(const HelixSpec& h) {
  const HelixSpec h1 = transform(h, kCyclicRotation);
  return {h, h1, transform(h1, kCyclicRotation)};
}

}  // namespace

std::vector<HelixSpec> simple100(const Simple100& p, double L) {
  check_turns(p.turns);
  HelixSpec h;
  h.anchor = {p.x0 * L, p.y0 * L, 0.0};
  h.direction = {0, 0, 1};
  h.radius = p.radius * L;
  h.pitch = L / p.turns;
  h.phase = normalize_angle(p.phase);
  h.handedness = p.handedness;
  h.tube_radius = p.tube_radius * L;
  return with_cyclic_images(h);
}

std::vector<HelixSpec> laves100(const Laves100& p, double L) {
  check_turns(p.turns);
  HelixSpec h;
  h.anchor = {0.25 * L, 0.0, 0.0};
  h.direction = {0, 0, 1};
  h.radius = p.radius * L;
  h.pitch = L / p.turns;
  h.phase = normalize_angle(0.5 * std::numbers::pi + p.phase);
  h.handedness = 1;
  h.tube_radius = p.tube_radius * L;
  auto out = with_cyclic_images(h);
  for (int k = 0; k < 3; ++k) out.push_back(transform(out[k], kInversion));
  return out;
}

SymmetryConstraint laves100_constraint() {
  SymmetryConstraint c;
  c.images = {{1, 0, kCyclicRotation, {}}, {2, 1, kCyclicRotation, {}}, {3, 0, kInversion, {}},
              {4, 1, kInversion, {}},      {5, 2, kInversion, {}}};
  return c;
}

std::vector<ChannelLine> gyroid_z_channels() {
  return {{0.25, 0.0, 1}, {0.75, 0.5, 1}, {0.25, 0.5, -1}, {0.75, 0.0, -1}};
}

std::vector<HelixSpec> gyroid100(const Gyroid100& p, double L) {
  check_turns(p.turns);
  // The +1 channels are exchanged by the body-centring translation and the
  // inversion through the origin maps them onto the -1 channels.
  HelixSpec h;
  h.anchor = {0.25 * L, 0.0, 0.0};
  h.direction = {0, 0, 1};
  h.radius = p.radius * L;
  h.pitch = L / p.turns;
  h.phase = normalize_angle(1.5 * std::numbers::pi + p.phase);
  h.handedness = 1;
  h.tube_radius = p.tube_radius * L;
  const HelixSpec h2 = translate(h, {0.5 * L, 0.5 * L, 0.5 * L});
  std::vector<HelixSpec> out;
  for (const HelixSpec& g : {h, h2, transform(h, kInversion), transform(h2, kInversion)})
    for (const HelixSpec& x : with_cyclic_images(g)) out.push_back(x);
  return out;
}

std::vector<HelixSpec> tetra100(const Gyroid100& p, double L) {
  auto out = gyroid100(p, L);
  out.resize(6);
  return out;
}

std::vector<HelixSpec> axial111(const Axial111& p, double L) {
  check_turns(p.turns);
  if (p.helices_per_axis < 1) throw Error(ErrorKind::InvalidArgument, "helices_per_axis must be >= 1");
  const auto dirs = family_directions(DirectionFamily::Fam111);
  const double pitch = axis_repeat_length(dirs[0], Lattice(L)) / p.turns;
  std::vector<HelixSpec> out;
  for (const AxisLine111& line : p.lines) {
    if (line.direction < 0 || line.direction > 3)
      throw Error(ErrorKind::InvalidArgument, "axis line direction index out of range");
    for (int k = 0; k < p.helices_per_axis; ++k) {
      HelixSpec h;
      h.anchor = L * line.anchor;
      h.direction = dirs[line.direction];
      h.radius = p.radius * L;
      h.pitch = pitch;
      h.phase = normalize_angle(p.phase + kTwoPi * k / p.helices_per_axis);
      h.handedness = line.handedness;
      h.tube_radius = p.tube_radius * L;
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace tphw::recipes
