// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <bit>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tphw/catalog.hpp"
#include "tphw/error.hpp"
#include "tphw/mesh.hpp"

using namespace tphw;

namespace {

// Distance from p to the helix centerline near parameter t0.
double curve_distance(const HelixSpec& h, const Vec3& p, double t0, double span) {
  double lo = t0 - span, hi = t0 + span;
  const double g = 0.6180339887498949;
  for (int i = 0; i < 120; ++i) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (norm(helix_point(h, a) - p) < norm(helix_point(h, b) - p)) hi = b;
    else lo = a;
  }
  return norm(helix_point(h, 0.5 * (lo + hi)) - p);
}

}  // namespace

TEST_CASE("tube counts, topology and radius") {
  HelixSpec h{{0, 0, 0}, {0, 0, 1}, 0.2, 1.0, 0.3, -1, 0.05};
  for (bool caps : {false, true}) {
    TubeOptions opt{12, 32, caps};
    const int turns = 2;
    const Mesh m = tube_mesh(h, 0.0, turns, opt);
    const std::size_t rings = turns * opt.per_turn + 1;
    CHECK(m.vertices.size() == rings * opt.around + (caps ? 2 : 0));
    CHECK(m.triangles.size() == 2 * opt.around * (rings - 1) + (caps ? 2 * opt.around : 0));
    const MeshCheck c = check_mesh(m);
    CHECK(c.ok());
    // Open tube is an annulus (chi = 0); capped tube is a sphere (chi = 2).
    CHECK(c.euler == (caps ? 2 : 0));
    for (std::size_t i = 0; i < rings; ++i)
      for (int j = 0; j < opt.around; j += 5) {
        const double t = kTwoPi * double(i) / opt.per_turn;
        const double d = curve_distance(h, m.vertices[i * opt.around + j], t, 0.3);
        CHECK(std::abs(d - h.tube_radius) <= 2e-3 * h.tube_radius);
      }
  }
}

TEST_CASE("outward winding") {
  HelixSpec h{{0, 0, 0}, {1, 0, 0}, 0.0, 1.0, 0.0, 1, 0.1};
  const Mesh m = tube_mesh(h, 0.0, 1, {8, 8, false});
  for (const auto& t : m.triangles) {
    const Vec3 a = m.vertices[t[0]], b = m.vertices[t[1]], c = m.vertices[t[2]];
    const Vec3 n = cross(b - a, c - a);
    const Vec3 centroid = (a + b + c) / 3.0;
    const Vec3 radial{0, centroid.y, centroid.z};
    CHECK(dot(n, radial) > 0);
  }
}

TEST_CASE("mesh errors") {
  HelixSpec h{{0, 0, 0}, {0, 0, 1}, 0.2, 1.0, 0.0, 1, 0.0};
  CHECK_THROWS_AS(tube_mesh(h, 0.0, 1, {}), Error);
  h.tube_radius = 0.05;
  CHECK_THROWS_AS(tube_mesh(h, 0.0, 1, {2, 64, false}), Error);
}

TEST_CASE("block pieces cover every image meeting the block") {
  const WeaveSpec w = build_weave("100-gyroid");
  const auto pieces = block_pieces(w, 2);
  CHECK(pieces.size() >= w.helices.size());
  for (const auto& p : pieces) {
    CHECK(p.turns >= 1);
    CHECK(w.lattice.contains(p.spec.anchor - w.helices[p.helix].anchor));
    // Some axis point of the covered range lies in the closed block.
    bool inside = false;
    for (int k = 0; k <= 200 && !inside; ++k) {
      const double s = p.spec.pitch * (p.t0 / kTwoPi + p.turns * k / 200.0);
      const Vec3 a = p.spec.anchor + s * p.spec.direction;
      inside = a.x > -1e-9 && a.y > -1e-9 && a.z > -1e-9 && a.x < 2 + 1e-9 && a.y < 2 + 1e-9 &&
               a.z < 2 + 1e-9;
    }
    CHECK(inside);
  }
  // Axis-aligned images crossing the whole block need two turns.
  int z_pieces = 0;
  for (const auto& p : pieces) z_pieces += std::abs(p.spec.direction.z) > 0.5 && p.turns == 2;
  CHECK(z_pieces > 0);
}

TEST_CASE("writers") {
  const auto dir = std::filesystem::temp_directory_path() / "tphw_mesh_test";
  std::filesystem::create_directories(dir);
  const WeaveSpec w = build_weave("100-simple-trio");
  const auto meshes = weave_meshes(w, 1, {8, 16, false});
  std::size_t nv = 0, nt = 0;
  for (const auto& m : meshes) {
    nv += m.vertices.size();
    nt += m.triangles.size();
  }
  write_obj(meshes, dir / "a.obj");
  const auto s = oracle::parse_obj((dir / "a.obj").string());
  CHECK(s.vertices == nv);
  CHECK(s.faces == nt);
  CHECK(s.objects == meshes.size());
  CHECK(s.indices_ok);

  write_stl(meshes, dir / "a.stl");
  CHECK(std::filesystem::file_size(dir / "a.stl") == stl_size(nt));
  std::ifstream in(dir / "a.stl", std::ios::binary);
  char header[80];
  in.read(header, 80);
  CHECK(std::string(header).rfind("tphw", 0) == 0);
  unsigned char count[4];
  in.read(reinterpret_cast<char*>(count), 4);
  CHECK((count[0] | count[1] << 8 | count[2] << 16 | std::uint32_t(count[3]) << 24) == nt);

  write_centerlines(w, 1, 16, dir / "c.obj");
  const auto c = oracle::parse_obj((dir / "c.obj").string());
  CHECK(c.lines == block_pieces(w, 1).size());
  CHECK(c.faces == 0);
  CHECK(c.indices_ok);
  CHECK_THROWS_AS(write_obj(meshes, dir / "no" / "such" / "dir.obj"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("mesh names are shell safe") {
  CHECK(mesh_name("⟨100⟩ Gyroid", 3, 1) == "⟨100⟩_Gyroid_3_1");
}

TEST_CASE("STL and OBJ hold the same triangles") {
  const auto dir = std::filesystem::temp_directory_path() / "tphw_mesh_same";
  std::filesystem::create_directories(dir);
  const auto meshes = weave_meshes(build_weave("100-trigonal-laves"), 1, {8, 16, false});
  write_obj(meshes, dir / "m.obj");
  write_stl(meshes, dir / "m.stl");
  // OBJ triangles.
  std::vector<Vec3> verts;
  std::vector<std::array<Vec3, 3>> obj;
  {
    std::ifstream in(dir / "m.obj");
    std::string tag;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      ls >> tag;
      if (tag == "v") {
        Vec3 v;
        ls >> v.x >> v.y >> v.z;
        verts.push_back(v);
      } else if (tag == "f") {
        std::size_t a, b, c;
        ls >> a >> b >> c;
        obj.push_back({verts[a - 1], verts[b - 1], verts[c - 1]});
      }
    }
  }
  // STL triangles, read byte by byte.
  std::ifstream in(dir / "m.stl", std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  auto f32 = [&](std::size_t off) {
    std::uint32_t u = bytes[off] | bytes[off + 1] << 8 | bytes[off + 2] << 16 | std::uint32_t(bytes[off + 3]) << 24;
    return static_cast<double>(std::bit_cast<float>(u));
  };
  const std::size_t n = bytes[80] | bytes[81] << 8 | bytes[82] << 16 | std::size_t(bytes[83]) << 24;
  REQUIRE(n == obj.size());
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t base = 84 + 50 * k + 12;
    for (int v = 0; v < 3; ++v) {
      const Vec3 p{f32(base + 12 * v), f32(base + 12 * v + 4), f32(base + 12 * v + 8)};
      worst = std::max(worst, norm(p - obj[k][v]));
    }
  }
  CHECK(worst < 2e-6);
  std::filesystem::remove_all(dir);
}
