// SPDX-License-Identifier: Apache-2.0
#include "tphw/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <utility>

#include "tphw/error.hpp"
#include "tphw/helix.hpp"

namespace tphw {
namespace {

// Double-reflection rotation-minimizing frames along sampled points.
std::vector<Vec3> rmf_normals(const std::vector<Vec3>& x, const std::vector<Vec3>& t, Vec3 r0) {
  std::vector<Vec3> r(x.size());
  r[0] = r0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const Vec3 v1 = x[i + 1] - x[i];
    const double c1 = dot(v1, v1);
    if (c1 == 0.0) {
      r[i + 1] = r[i];
      continue;
    }
    const Vec3 rl = r[i] - (2.0 / c1) * dot(v1, r[i]) * v1;
    const Vec3 tl = t[i] - (2.0 / c1) * dot(v1, t[i]) * v1;
    const Vec3 v2 = t[i + 1] - tl;
    const double c2 = dot(v2, v2);
    Vec3 n = c2 > 1e-300 ? rl - (2.0 / c2) * dot(v2, rl) * v2 : rl;
    // Re-orthogonalize against drift.
    n = n - dot(n, t[i + 1]) * t[i + 1];
    r[i + 1] = normalized(n);
  }
  return r;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xffu));
}

void put_f32(std::string& out, double v) { put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v))); }

Vec3 triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = cross(b - a, c - a);
  const double l = norm(n);
  return l > 0 ? n / l : Vec3{};
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace

Mesh tube_mesh(const HelixSpec& h, double t0, int turns, const TubeOptions& opt, std::string name) {
  if (opt.around < 3) throw Error(ErrorKind::InvalidArgument, "around must be >= 3");
  if (opt.per_turn < 4) throw Error(ErrorKind::InvalidArgument, "per_turn must be >= 4");
  if (turns < 1) throw Error(ErrorKind::InvalidArgument, "need at least one turn");
  if (h.radius == 0.0 && h.pitch == 0.0) throw Error(ErrorKind::DegenerateHelix, "zero radius and pitch");
  if (!(h.tube_radius > 0.0)) throw Error(ErrorKind::EmptyMesh, "tube radius is zero");

  const HelixCurve curve(h);
  const std::size_t rings = static_cast<std::size_t>(turns) * opt.per_turn + 1;
  const std::size_t m = static_cast<std::size_t>(opt.around);
  std::vector<Vec3> x(rings), t(rings);
  for (std::size_t i = 0; i < rings; ++i) {
    const double ti = t0 + kTwoPi * static_cast<double>(i) / opt.per_turn;
    x[i] = curve.point(ti);
    t[i] = normalized(curve.first_derivative(ti));
  }
  Vec3 seed = curve.frame().u - dot(curve.frame().u, t[0]) * t[0];
  if (norm(seed) < 1e-6) seed = curve.frame().v - dot(curve.frame().v, t[0]) * t[0];
  const std::vector<Vec3> r = rmf_normals(x, t, normalized(seed));

  Mesh mesh;
  mesh.name = std::move(name);
  mesh.vertices.reserve(rings * m + (opt.caps ? 2 : 0));
  for (std::size_t i = 0; i < rings; ++i) {
    const Vec3 s = cross(t[i], r[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
      mesh.vertices.push_back(x[i] + h.tube_radius * (std::cos(th) * r[i] + std::sin(th) * s));
    }
  }
  auto id = [m](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * m + j % m); };
  mesh.triangles.reserve(2 * m * (rings - 1) + (opt.caps ? 2 * m : 0));
  for (std::size_t i = 0; i + 1 < rings; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      mesh.triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      mesh.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i + 1, j)});
    }
  if (opt.caps) {
    const auto c0 = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(x.front());
    const auto c1 = c0 + 1;
    mesh.vertices.push_back(x.back());
    for (std::size_t j = 0; j < m; ++j) {
      mesh.triangles.push_back({c0, id(0, j + 1), id(0, j)});
      mesh.triangles.push_back({c1, id(rings - 1, j), id(rings - 1, j + 1)});
    }
  }
  return mesh;
}

Mesh tube_mesh(const HelixSpec& h, const Lattice& lattice, int cells, const TubeOptions& opt) {
  if (cells < 1) throw Error(ErrorKind::InvalidArgument, "cells must be >= 1");
  return tube_mesh(h, 0.0, cells * turns_per_repeat(h, lattice), opt);
}

std::vector<HelixImagePiece> block_pieces(const WeaveSpec& w, int cells) {
  if (cells < 1) throw Error(ErrorKind::InvalidArgument, "cells must be >= 1");
  const double L = w.lattice.period();
  const double side = cells * L;
  const Vec3 center{0.5 * side, 0.5 * side, 0.5 * side};
  const double half_diag = 0.5 * side * std::sqrt(3.0);
  std::vector<HelixImagePiece> out;
  for (std::size_t i = 0; i < w.helices.size(); ++i) {
    const HelixSpec& h = w.helices[i];
    const Vec3 d = h.direction;
    const double repeat = axis_repeat_length(d, w.lattice);
    std::vector<Vec3> seen;  // perpendicular offsets of lines already taken
    std::size_t image = 0;
    for (const Vec3& T : w.lattice.translations_within(center - h.anchor, half_diag + repeat)) {
      const Vec3 a = h.anchor + T;
      Vec3 q = a - center;
      q = q - dot(q, d) * d;
      if (norm(q) > half_diag + 1e-9) continue;
      bool dup = false;
      for (const Vec3& s : seen) dup = dup || norm(s - q) < 1e-9 * L;
      if (dup) continue;
      seen.push_back(q);
      // Slab clip of the axis line a + s d against the closed block.
      double s0 = -1e300, s1 = 1e300;
      bool empty = false;
      for (int k = 0; k < 3; ++k) {
        const double ak = k == 0 ? a.x : k == 1 ? a.y : a.z;
        const double dk = k == 0 ? d.x : k == 1 ? d.y : d.z;
        const double eps = 1e-9 * L;
        if (std::abs(dk) < 1e-12) {
          if (ak < -eps || ak > side + eps) empty = true;
          continue;
        }
        double lo = (0.0 - ak) / dk, hi = (side - ak) / dk;
        if (lo > hi) std::swap(lo, hi);
        s0 = std::max(s0, lo);
        s1 = std::min(s1, hi);
      }
      if (empty || s1 - s0 <= 1e-9 * L) continue;
      const double tol = 1e-9;
      const double first = std::floor(s0 / h.pitch + tol);
      const double last = std::ceil(s1 / h.pitch - tol);
      HelixImagePiece piece;
      piece.helix = i;
      piece.image = image++;
      piece.spec = translate(h, T);
      piece.t0 = kTwoPi * first;
      piece.turns = std::max(1, static_cast<int>(last - first));
      out.push_back(piece);
    }
  }
  return out;
}

std::string mesh_name(std::string_view weave_name, std::size_t helix, std::size_t image) {
  std::string n;
  for (char c : weave_name) n.push_back(std::isspace(static_cast<unsigned char>(c)) ? '_' : c);
  if (n.empty()) n = "weave";
  return n + "_" + std::to_string(helix) + "_" + std::to_string(image);
}

std::vector<Mesh> weave_meshes(const WeaveSpec& w, int cells, const TubeOptions& opt) {
  require_constructed(w);
  std::vector<Mesh> out;
  for (const auto& p : block_pieces(w, cells))
    out.push_back(tube_mesh(p.spec, p.t0, p.turns, opt, mesh_name(w.name, p.helix, p.image)));
  return out;
}

MeshCheck check_mesh(const Mesh& m) {
  MeshCheck c;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> undirected;
  const auto nv = m.vertices.size();
  for (const auto& tri : m.triangles) {
    bool in_range = true;
    for (auto v : tri) in_range = in_range && v < nv;
    if (!in_range) {
      c.indices_in_range = false;
      continue;
    }
    const Vec3 e1 = m.vertices[tri[1]] - m.vertices[tri[0]];
    const Vec3 e2 = m.vertices[tri[2]] - m.vertices[tri[0]];
    const double scale = std::max(norm2(e1), norm2(e2));
    if (!(norm(cross(e1, e2)) > 1e-12 * scale)) ++c.degenerate;
    for (int k = 0; k < 3; ++k) {
      const auto a = tri[k], b = tri[(k + 1) % 3];
      if (++directed[{a, b}] > 1) c.consistent_winding = false;
      if (++undirected[{std::min(a, b), std::max(a, b)}] > 2) c.manifold = false;
    }
  }
  c.euler = static_cast<long>(nv) - static_cast<long>(undirected.size()) +
            static_cast<long>(m.triangles.size());
  return c;
}

void write_obj(const std::vector<Mesh>& meshes, const std::filesystem::path& path) {
  auto out = open_out(path);
  char buf[128];
  std::size_t base = 1;
  for (const Mesh& m : meshes) {
    out << "o " << m.name << '\n';
    for (const Vec3& v : m.vertices) {
      std::snprintf(buf, sizeof buf, "v %.6f %.6f %.6f\n", v.x, v.y, v.z);
      out << buf;
    }
    for (const auto& t : m.triangles)
      out << "f " << base + t[0] << ' ' << base + t[1] << ' ' << base + t[2] << '\n';
    base += m.vertices.size();
  }
  finish(out, path);
}

std::uintmax_t stl_size(std::size_t triangles) { return 84u + 50u * static_cast<std::uintmax_t>(triangles); }

void write_stl(const std::vector<Mesh>& meshes, const std::filesystem::path& path) {
  std::size_t count = 0;
  for (const Mesh& m : meshes) count += m.triangles.size();
  std::string buf(80, '\0');
  const std::string_view header = "tphw mesh export";
  std::copy(header.begin(), header.end(), buf.begin());
  put_u32(buf, static_cast<std::uint32_t>(count));
  for (const Mesh& m : meshes)
    for (const auto& t : m.triangles) {
      const Vec3 &a = m.vertices[t[0]], &b = m.vertices[t[1]], &c = m.vertices[t[2]];
      const Vec3 n = triangle_normal(a, b, c);
      for (const Vec3& v : {n, a, b, c}) {
        put_f32(buf, v.x);
        put_f32(buf, v.y);
        put_f32(buf, v.z);
      }
      buf.push_back('\0');
      buf.push_back('\0');
    }
  auto out = open_out(path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  finish(out, path);
}

void write_centerlines(const WeaveSpec& w, int cells, int per_turn, const std::filesystem::path& path) {
  require_constructed(w);
  if (per_turn < 1) throw Error(ErrorKind::InvalidArgument, "per_turn must be >= 1");
  const auto pieces = block_pieces(w, cells);
  auto out = open_out(path);
  char buf[128];
  std::size_t base = 1;
  for (const auto& p : pieces) {
    out << "o " << mesh_name(w.name, p.helix, p.image) << '\n';
    const HelixCurve curve(p.spec);
    const std::size_t n = static_cast<std::size_t>(p.turns) * per_turn + 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3 v = curve.point(p.t0 + kTwoPi * static_cast<double>(i) / per_turn);
      std::snprintf(buf, sizeof buf, "v %.6f %.6f %.6f\n", v.x, v.y, v.z);
      out << buf;
    }
    out << 'l';
    for (std::size_t i = 0; i < n; ++i) out << ' ' << base + i;
    out << '\n';
    base += n;
  }
  finish(out, path);
}

}  // namespace tphw
