// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tphw/weave.hpp"

namespace tphw {

/// Indexed triangle surface. Triangles are 0-based and wound
/// counterclockwise seen from outside.
struct Mesh {
  std::string name;
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
};

struct TubeOptions {
  int around = 24;    // vertices per ring
  int per_turn = 64;  // rings per helix turn
  bool caps = false;
};

/// Tube of radius h.tube_radius swept along t in [t0, t0 + 2pi turns] with a
/// rotation-minimizing frame (double reflection) seeded from the helix
/// frame. turns * per_turn + 1 rings. Throws EmptyMesh for a zero tube
/// radius, DegenerateHelix, InvalidArgument for bad tessellation counts.
Mesh tube_mesh(const HelixSpec& h, double t0, int turns, const TubeOptions& opt,
               std::string name = "tube");

/// Tube over `cells` axial repeats starting at t = 0.
Mesh tube_mesh(const HelixSpec& h, const Lattice& lattice, int cells, const TubeOptions& opt);

/// Lattice image of one helix inside the export block, with the parameter
/// range covering the block in whole turns.
struct HelixImagePiece {
  std::size_t helix = 0;
  std::size_t image = 0;
  HelixSpec spec;  // translated copy
  double t0 = 0.0;
  int turns = 0;
};

/// Every image whose axis meets the block [0, cells L]^3, clipped to whole
/// turns. Ordered by helix index, then by translation.
std::vector<HelixImagePiece> block_pieces(const WeaveSpec& w, int cells);

/// One mesh per piece, named "<weave>_<helix>_<image>".
std::vector<Mesh> weave_meshes(const WeaveSpec& w, int cells, const TubeOptions& opt = {});

struct MeshCheck {
  bool indices_in_range = true;
  bool manifold = true;          // every undirected edge in at most 2 triangles
  bool consistent_winding = true;  // every directed edge at most once
  std::size_t degenerate = 0;    // zero-area triangles
  long euler = 0;                // V - E + F

  bool ok() const noexcept {
    return indices_in_range && manifold && consistent_winding && degenerate == 0;
  }
};
MeshCheck check_mesh(const Mesh& m);

/// Name with whitespace replaced, safe for an OBJ "o" line.
std::string mesh_name(std::string_view weave_name, std::size_t helix, std::size_t image);

void write_obj(const std::vector<Mesh>& meshes, const std::filesystem::path& path);
void write_stl(const std::vector<Mesh>& meshes, const std::filesystem::path& path);
/// Helix centerlines of the block as OBJ "l" elements, per_turn samples per turn.
void write_centerlines(const WeaveSpec& w, int cells, int per_turn,
                       const std::filesystem::path& path);

/// 84 + 50 * triangle count.
std::uintmax_t stl_size(std::size_t triangles);

}  // namespace tphw
