// SPDX-License-Identifier: Apache-2.0
#include "tphw/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "tphw/error.hpp"
#include "tphw/kernels.hpp"

namespace tphw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One helix sampled over a single lattice repeat, padded by one sample on
// each side so grid local minima at the seam are detected.
struct Sampled {
  HelixCurve curve;
  int turns = 1;
  int n = 0;             // samples in [0, period)
  double period = 0.0;   // 2 pi * turns
  double dt = 0.0;
  Vec3 repeat;           // lattice vector advanced over one period
  Vec3 seg0, seg1;       // padded axis segment
  Vec3 mid;
  kernels::PointBlock pts;

  Sampled(const HelixSpec& h, const Lattice& lattice, int grid_n) : curve(h) {
    turns = turns_per_repeat(h, lattice);
    n = grid_n * turns;
    period = kTwoPi * turns;
    dt = period / n;
    const Vec3 d = curve.frame().d;
    repeat = (curve.lead() * period) * d;
    seg0 = h.anchor - (curve.lead() * dt) * d;
    seg1 = h.anchor + (curve.lead() * (period + dt)) * d;
    mid = h.anchor + (0.5 * curve.lead() * period) * d;
    pts.reserve(static_cast<std::size_t>(n) + 2);
    for (int i = -1; i <= n; ++i) pts.push_back(curve.point(i * dt));
  }
};

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  const Vec3 u = p1 - p0, v = q1 - q0, w = p0 - q0;
  const double a = dot(u, u), b = dot(u, v), c = dot(v, v), d = dot(u, w), e = dot(v, w);
  const double den = a * c - b * b;
  double sn, sd = den, tn, td = den;
  if (den < 1e-14 * a * c) {
    sn = 0.0; sd = 1.0; tn = e; td = c;
  } else {
    sn = b * e - c * d;
    tn = a * e - b * d;
    if (sn < 0.0) { sn = 0.0; tn = e; td = c; }
    else if (sn > sd) { sn = sd; tn = e + b; td = c; }
  }
  if (tn < 0.0) {
    tn = 0.0;
    if (-d < 0.0) sn = 0.0;
    else if (-d > a) sn = sd;
    else { sn = -d; sd = a; }
  } else if (tn > td) {
    tn = td;
    if (-d + b < 0.0) sn = 0.0;
    else if (-d + b > a) sn = sd;
    else { sn = -d + b; sd = a; }
  }
  const double sc = std::abs(sn) < 1e-300 ? 0.0 : sn / sd;
  const double tc = std::abs(tn) < 1e-300 ? 0.0 : tn / td;
  return norm(w + sc * u - tc * v);
}

struct Polished {
  double s, t, f;
  bool non_isolated;
};

template <typename F>
double golden_section(F&& f, double lo, double hi) {
  constexpr double g = 0.6180339887498949;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++i) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

// Damped Newton on F(s,t) = |P1(s) - P2(t) - T|^2.
Polished polish(const HelixCurve& c1, const HelixCurve& c2, const Vec3& T, double s, double t,
                double h) {
  auto F = [&](double a, double b) { return norm2(c1.point(a) - c2.point(b) - T); };
  double f = F(s, t);
  double hss = 0, htt = 0, hst = 0;
  for (int it = 0; it < 60; ++it) {
    const Vec3 delta = c1.point(s) - c2.point(t) - T;
    const Vec3 d1 = c1.first_derivative(s), d2 = c2.first_derivative(t);
    const double gs = 2.0 * dot(delta, d1);
    const double gt = -2.0 * dot(delta, d2);
    hss = 2.0 * (dot(d1, d1) + dot(delta, c1.second_derivative(s)));
    htt = 2.0 * (dot(d2, d2) - dot(delta, c2.second_derivative(t)));
    hst = -2.0 * dot(d1, d2);
    if (std::hypot(gs, gt) < 1e-12) break;
    const double detH = hss * htt - hst * hst;
    bool moved = false;
    if (hss > 0.0 && detH > 1e-14 * (hss + htt) * (hss + htt)) {
      const double ds = -(htt * gs - hst * gt) / detH;
      const double dtt = -(hss * gt - hst * gs) / detH;
      double alpha = 1.0;
      for (int k = 0; k < 30; ++k, alpha *= 0.5) {
        const double fn = F(s + alpha * ds, t + alpha * dtt);
        if (fn <= f) {
          s += alpha * ds;
          t += alpha * dtt;
          moved = fn < f || alpha == 1.0;
          f = fn;
          break;
        }
      }
    }
    if (!moved) {
      const double f0 = f;
      s = golden_section([&](double x) { return F(x, t); }, s - h, s + h);
      t = golden_section([&](double x) { return F(s, x); }, t - h, t + h);
      f = F(s, t);
      h *= 0.5;
      if (!(f < f0) && h < 1e-12) break;
    }
  }
  const double tr = hss + htt;
  const bool flat = (hss * htt - hst * hst) <= 1e-10 * tr * tr;
  return {s, t, f, flat};
}

void check_grid(int grid_n) {
  if (grid_n < 16) throw Error(ErrorKind::InvalidArgument, "grid_n must be >= 16");
}

struct Candidate {
  Vec3 translation;
  double lower_bound;
};

std::vector<Candidate> candidate_translations(const Sampled& a, const Sampled& b,
                                              const Lattice& lattice, double cutoff,
                                              bool exclude_self) {
  const double ra = a.curve.spec().radius, rb = b.curve.spec().radius;
  const double half_a = 0.5 * norm(a.seg1 - a.seg0), half_b = 0.5 * norm(b.seg1 - b.seg0);
  const Vec3 center = a.mid - b.mid;
  const double reach = cutoff + ra + rb + half_a + half_b + 1e-9 * lattice.period();
  std::vector<Candidate> out;
  for (const Vec3& T : lattice.translations_within(center, reach)) {
    if (exclude_self && norm(cross(T, a.curve.frame().d)) <= 1e-9 * lattice.period()) continue;
    const double lb = segment_distance(a.seg0, a.seg1, b.seg0 + T, b.seg1 + T) - ra - rb;
    if (lb <= cutoff) out.push_back({T, lb});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& x, const Candidate& y) { return x.lower_bound < y.lower_bound; });
  return out;
}

// Grid local minima for one translation, polished and reduced into the
// fundamental parameter ranges.
void scan_translation(const Sampled& a, const Sampled& b, const Vec3& T, std::vector<double>& grid,
                      std::vector<DistanceWitness>& out) {
  const std::size_t na = a.pts.size(), nb = b.pts.size();
  grid.resize(na * nb);
  kernels::distance2_grid(a.pts, b.pts, T, grid);
  const double h = std::max(a.dt, b.dt);
  for (std::size_t i = 1; i + 1 < na; ++i) {
    for (std::size_t j = 1; j + 1 < nb; ++j) {
      const double v = grid[i * nb + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (grid[(i + di) * nb + (j + dj)] < v) { is_min = false; break; }
        }
      if (!is_min) continue;
      const double s0 = (static_cast<double>(i) - 1.0) * a.dt;
      const double t0 = (static_cast<double>(j) - 1.0) * b.dt;
      const Polished p = polish(a.curve, b.curve, T, s0, t0, h);
      DistanceWitness w{std::sqrt(std::max(0.0, p.f)), p.s, p.t, T, p.non_isolated};
      // Reduce parameters; shifting along a curve by one period moves it by
      // a lattice vector which the translation absorbs.
      const double ks = std::floor(w.s / a.period);
      w.s -= ks * a.period;
      w.translation -= ks * a.repeat;
      const double kt = std::floor(w.t / b.period);
      w.t -= kt * b.period;
      w.translation += kt * b.repeat;
      if (w.s >= a.period) w.s = 0.0;
      if (w.t >= b.period) w.t = 0.0;
      out.push_back(w);
    }
  }
}

bool same_witness(const DistanceWitness& x, const DistanceWitness& y, double ps, double pt) {
  if (norm(x.translation - y.translation) > 1e-9) return false;
  if (x.non_isolated && y.non_isolated) return std::abs(x.distance - y.distance) <= 1e-9;
  auto circ = [](double a, double b, double p) {
    const double d = std::abs(a - b);
    return std::min(d, p - d);
  };
  return circ(x.s, y.s, ps) < 1e-6 && circ(x.t, y.t, pt) < 1e-6;
}

bool witness_less(const DistanceWitness& x, const DistanceWitness& y) {
  if (x.distance != y.distance) return x.distance < y.distance;
  return std::tie(x.translation.x, x.translation.y, x.translation.z) <
         std::tie(y.translation.x, y.translation.y, y.translation.z);
}

DistanceWitness global_minimum(const HelixSpec& h1, const HelixSpec& h2, const Lattice& lattice,
                               int grid_n, bool exclude_self, double cutoff) {
  check_grid(grid_n);
  const Sampled a(h1, lattice, grid_n), b(h2, lattice, grid_n);
  if (!std::isfinite(cutoff)) {
    // Any finite upper bound keeps the candidate set finite.
    cutoff = kInf;
    const double L = lattice.period();
    for (const Vec3& T : lattice.translations_within(a.mid - b.mid, 2.0 * L)) {
      if (exclude_self && norm(cross(T, a.curve.frame().d)) <= 1e-9 * L) continue;
      cutoff = std::min(cutoff, norm(a.curve.point(0.0) - b.curve.point(0.0) - T));
    }
  }
  DistanceWitness best{kInf, 0.0, 0.0, {}, false};
  std::vector<double> grid;
  std::vector<DistanceWitness> found;
  for (const Candidate& c : candidate_translations(a, b, lattice, cutoff, exclude_self)) {
    if (c.lower_bound > std::min(best.distance, cutoff)) break;
    found.clear();
    scan_translation(a, b, c.translation, grid, found);
    for (const auto& w : found)
      if (witness_less(w, best)) best = w;
  }
  return best;
}

}  // namespace

DistanceWitness pair_min_distance(const HelixSpec& h1, const HelixSpec& h2, const Lattice& lattice,
                                  int grid_n) {
  return global_minimum(h1, h2, lattice, grid_n, false, kInf);
}

DistanceWitness self_min_distance(const HelixSpec& h, const Lattice& lattice, int grid_n) {
  return global_minimum(h, h, lattice, grid_n, true, kInf);
}

std::vector<DistanceWitness> pair_local_minima(const HelixSpec& h1, const HelixSpec& h2,
                                               const Lattice& lattice, double max_distance,
                                               int grid_n, bool exclude_self) {
  check_grid(grid_n);
  const Sampled a(h1, lattice, grid_n), b(h2, lattice, grid_n);
  std::vector<double> grid;
  std::vector<DistanceWitness> found, out;
  for (const Candidate& c : candidate_translations(a, b, lattice, max_distance, exclude_self)) {
    found.clear();
    scan_translation(a, b, c.translation, grid, found);
    for (const auto& w : found) {
      if (w.distance > max_distance) continue;
      bool dup = false;
      for (auto& o : out) {
        if (same_witness(o, w, a.period, b.period)) {
          if (w.distance < o.distance) o = w;
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end(), [](const DistanceWitness& x, const DistanceWitness& y) {
    return std::tie(x.s, x.t, x.translation.x, x.translation.y, x.translation.z) <
           std::tie(y.s, y.t, y.translation.x, y.translation.y, y.translation.z);
  });
  return out;
}

ClearanceReport clearance(const WeaveSpec& w, int grid_n) {
  require_constructed(w);
  ClearanceReport rep;
  rep.min_gap = kInf;
  struct PairMin {
    std::size_t i, j;
    DistanceWitness wit;
    double gap;
  };
  std::vector<PairMin> all;
  const auto& hs = w.helices;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i; j < hs.size(); ++j) {
      const DistanceWitness d = i == j ? self_min_distance(hs[i], w.lattice, grid_n)
                                       : pair_min_distance(hs[i], hs[j], w.lattice, grid_n);
      const double gap = d.distance - hs[i].tube_radius - hs[j].tube_radius;
      all.push_back({i, j, d, gap});
      ++rep.pair_count_evaluated;
      if (gap < rep.min_gap) {
        rep.min_gap = gap;
        rep.witness = d;
        rep.pair_i = i;
        rep.pair_j = j;
      }
    }
  }
  for (const auto& p : all) {
    if (p.gap > rep.min_gap + 1e-9) continue;
    const HelixCurve c1(hs[p.i]), c2(hs[p.j]);
    const Vec3 mid = 0.5 * (c1.point(p.wit.s) + c2.point(p.wit.t) + p.wit.translation);
    rep.contacts.push_back({p.i, p.j, p.wit, p.gap, mid});
  }
  return rep;
}

double min_centerline_distance(const WeaveSpec& w, int grid_n) {
  require_constructed(w);
  const auto& hs = w.helices;
  double best = kInf;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i; j < hs.size(); ++j) {
      const DistanceWitness d = global_minimum(hs[i], hs[j], w.lattice, grid_n, i == j, best);
      best = std::min(best, d.distance);
    }
  return best;
}

std::vector<Contact> find_contacts(const WeaveSpec& w, double gap_tol, int grid_n) {
  require_constructed(w);
  if (!(gap_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "gap_tol must be positive");
  const auto& hs = w.helices;
  std::vector<Contact> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const HelixCurve c1(hs[i]);
    for (std::size_t j = i; j < hs.size(); ++j) {
      const HelixCurve c2(hs[j]);
      const double reach = hs[i].tube_radius + hs[j].tube_radius + gap_tol;
      const std::size_t first = out.size();
      for (const auto& m : pair_local_minima(hs[i], hs[j], w.lattice, reach, grid_n, i == j)) {
        Contact c{i, j, m, m.distance - hs[i].tube_radius - hs[j].tube_radius,
                  0.5 * (c1.point(m.s) + c2.point(m.t) + m.translation)};
        bool dup = false;
        for (std::size_t k = first; k < out.size() && !dup; ++k)
          dup = norm(w.lattice.minimum_image(out[k].midpoint - c.midpoint)) < 1e-6 &&
                std::abs(out[k].gap - c.gap) < 1e-9;
        if (!dup) out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace tphw
