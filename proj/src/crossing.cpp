// SPDX-License-Identifier: Apache-2.0
#include "tphw/crossing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "tphw/error.hpp"

namespace tphw {
namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
  return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

Vec3 reduce_to_cell(const Vec3& p, double L) {
  auto r = [L](double x) {
    double y = x - L * std::floor(x / L);
    return y >= L ? 0.0 : y;
  };
  return {r(p.x), r(p.y), r(p.z)};
}

// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations.
std::array<double, 3> symmetric_eigenvalues(std::array<std::array<double, 3>, 3> a) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if (off < 1e-30) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 3> ev{a[0][0], a[1][1], a[2][2]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Integer key of a lattice vector in units of L/2.
std::array<long, 3> shift_key(const Vec3& s, double L) {
  return {std::lround(2.0 * s.x / L), std::lround(2.0 * s.y / L), std::lround(2.0 * s.z / L)};
}

struct KeyHash {
  std::size_t operator()(const std::array<long, 4>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long v : k) h = (h ^ static_cast<std::size_t>(v + 1000003)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<CrossingCluster> cluster_crossings(const std::vector<Contact>& contacts,
                                               const Lattice& lattice, double cluster_radius) {
  if (!(cluster_radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "cluster_radius must be positive");
  const double L = lattice.period();
  const std::size_t n = contacts.size();

  struct Link {
    std::size_t to;
    Vec3 shift;  // placed(to) = midpoint(to) - shift + placed offset of the source
  };
  std::vector<std::vector<Link>> adj(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) {
      const Vec3 delta = contacts[l].midpoint - contacts[k].midpoint;
      for (const Vec3& V : lattice.translations_within(delta, cluster_radius)) {
        if (l == k && norm(V) < 1e-9 * L) continue;
        adj[k].push_back({l, V});
        if (l != k) adj[l].push_back({k, -1.0 * V});
      }
    }

  std::vector<Vec3> reduced(n);
  for (std::size_t k = 0; k < n; ++k) reduced[k] = reduce_to_cell(contacts[k].midpoint, L);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(reduced[a], reduced[b]); });

  std::vector<bool> seen(n, false);
  std::vector<Vec3> shift(n);
  std::vector<CrossingCluster> out;
  for (std::size_t start : order) {
    if (seen[start]) continue;
    CrossingCluster c;
    seen[start] = true;
    shift[start] = reduced[start] - contacts[start].midpoint;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t k = queue.front();
      queue.pop_front();
      c.members.push_back(k);
      c.shifts.push_back(shift[k]);
      for (const Link& e : adj[k]) {
        const Vec3 s = shift[k] - e.shift;
        if (!seen[e.to]) {
          seen[e.to] = true;
          shift[e.to] = s;
          queue.push_back(e.to);
        } else if (norm(shift[e.to] - s) > 1e-6 * L) {
          c.percolating = true;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

bool same_curve_ref(const CurveRef& a, const CurveRef& b, const std::vector<HelixSpec>& hs,
                    double L) {
  if (a.helix != b.helix) return false;
  const Vec3 diff = a.shift - b.shift;
  const Frame f = frame_for_direction(hs[a.helix].direction);
  return norm(cross(diff, f.d)) <= 1e-6 * L;
}

std::size_t curve_index(std::vector<CurveRef>& curves, const CurveRef& c,
                        const std::vector<HelixSpec>& hs, double L) {
  for (std::size_t k = 0; k < curves.size(); ++k)
    if (same_curve_ref(curves[k], c, hs, L)) return k;
  curves.push_back(c);
  return curves.size() - 1;
}

}  // namespace

CrossingSignature signature_of(const WeaveSpec& w, const std::vector<Contact>& contacts,
                               const CrossingCluster& cluster) {
  if (cluster.members.empty()) throw Error(ErrorKind::InvalidArgument, "empty crossing cluster");
  const double L = w.lattice.period();
  CrossingSignature sig;
  sig.percolating = cluster.percolating;
  std::map<std::pair<std::size_t, std::size_t>, int> per_pair;
  std::vector<Vec3> pts;
  for (std::size_t m = 0; m < cluster.members.size(); ++m) {
    const Contact& c = contacts.at(cluster.members[m]);
    const Vec3& s = cluster.shifts[m];
    const std::size_t a = curve_index(sig.curves, {c.helix_i, s}, w.helices, L);
    const std::size_t b = curve_index(sig.curves, {c.helix_j, s + c.witness.translation}, w.helices, L);
    ++per_pair[{std::min(a, b), std::max(a, b)}];
    pts.push_back(c.midpoint + s);
  }
  sig.participants = static_cast<int>(sig.curves.size());
  for (const auto& kv : per_pair) sig.pair_contacts.push_back(kv.second);
  std::sort(sig.pair_contacts.begin(), sig.pair_contacts.end());

  Vec3 mean;
  for (const Vec3& p : pts) mean += p;
  mean = (1.0 / static_cast<double>(pts.size())) * mean;
  std::array<std::array<double, 3>, 3> cov{};
  for (const Vec3& p : pts) {
    const Vec3 q = p - mean;
    const double v[3] = {q.x, q.y, q.z};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) cov[r][k] += v[r] * v[k];
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      sig.cluster_diameter = std::max(sig.cluster_diameter, norm(pts[a] - pts[b]));
  sig.coplanarity = std::sqrt(std::max(0.0, symmetric_eigenvalues(cov)[0]));
  return sig;
}

std::string to_string(const SignatureClass& c) {
  std::ostringstream os;
  os << c.participants << ":{";
  for (std::size_t k = 0; k < c.pair_contacts.size(); ++k) os << (k ? "," : "") << c.pair_contacts[k];
  os << "}";
  return os.str();
}

CrossingAnalysis analyze_crossings(const WeaveSpec& w, const AnalysisConfig& cfg) {
  require_constructed(w);
  const double L = w.lattice.period();
  CrossingAnalysis a;
  a.contacts = find_contacts(w, cfg.gap_tol * L, cfg.grid_n);
  a.clusters = cluster_crossings(a.contacts, w.lattice, cfg.cluster_radius * L);
  for (const auto& c : a.clusters) {
    a.signatures.push_back(signature_of(w, a.contacts, c));
    const auto& s = a.signatures.back();
    ++a.histogram[SignatureClass{s.participants, s.pair_contacts}];
  }
  return a;
}

Classification classify_analysis(const WeaveSpec& w, const CrossingAnalysis& a) {
  Classification out;
  out.histogram = a.histogram;
  const auto& want = w.expected.helices_per_crossing;
  std::vector<bool> used(want.size(), false);
  bool matched = out.histogram.size() == want.size();
  for (const auto& kv : out.histogram) {
    std::string name;
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (!used[k] && want[k] == kv.first.participants) {
        used[k] = true;
        if (k < w.expected.crossing_types.size()) name = w.expected.crossing_types[k];
        break;
      }
    }
    if (name.empty()) matched = false;
    out.names.push_back(name);
  }
  const bool percolates =
      std::any_of(a.signatures.begin(), a.signatures.end(), [](const auto& s) { return s.percolating; });
  out.pass = matched && !percolates && !out.histogram.empty();
  std::ostringstream os;
  os << out.histogram.size() << " class(es):";
  for (const auto& kv : out.histogram) os << ' ' << to_string(kv.first) << " x" << kv.second;
  if (percolates) os << "; a cluster percolates";
  out.detail = os.str();
  return out;
}

Classification classify_weave(const WeaveSpec& w, const AnalysisConfig& cfg) {
  return classify_analysis(w, analyze_crossings(w, cfg));
}

void PeriodicGraph::add_edge(std::size_t u, std::size_t v, const Vec3& t) {
  if (u >= node_count || v >= node_count) throw Error(ErrorKind::InvalidArgument, "edge node out of range");
  if (u == v && norm(t) < 1e-9 * lattice.period()) return;
  if (!has_edge(u, v, t)) edges.push_back({u, v, t});
  if (!has_edge(v, u, -1.0 * t)) edges.push_back({v, u, -1.0 * t});
}

bool PeriodicGraph::has_edge(std::size_t u, std::size_t v, const Vec3& t) const {
  const double tol = 1e-6 * lattice.period();
  return std::any_of(edges.begin(), edges.end(), [&](const PeriodicEdge& e) {
    return e.u == u && e.v == v && norm(e.translation - t) <= tol;
  });
}

bool PeriodicGraph::symmetric() const {
  return std::all_of(edges.begin(), edges.end(),
                     [&](const PeriodicEdge& e) { return has_edge(e.v, e.u, -1.0 * e.translation); });
}

std::vector<std::vector<std::size_t>> PeriodicGraph::components() const {
  std::vector<std::size_t> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < node_count; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<std::size_t>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  return out;
}

PeriodicGraph PeriodicGraph::induced(const std::vector<std::size_t>& nodes) const {
  PeriodicGraph g;
  g.lattice = lattice;
  g.node_count = nodes.size();
  std::unordered_map<std::size_t, std::size_t> index;
  for (std::size_t k = 0; k < nodes.size(); ++k) index[nodes[k]] = k;
  for (const auto& e : edges) {
    auto a = index.find(e.u), b = index.find(e.v);
    if (a != index.end() && b != index.end()) g.edges.push_back({a->second, b->second, e.translation});
  }
  return g;
}

PeriodicGraph contact_graph(const WeaveSpec& w, const CrossingAnalysis& a) {
  PeriodicGraph g;
  g.lattice = w.lattice;
  g.node_count = w.helices.size();
  // Every contact joins helix i in the home cell to the image of helix j
  // under the contact translation.
  for (const auto& c : a.contacts) g.add_edge(c.helix_i, c.helix_j, c.witness.translation);
  return g;
}

PeriodicGraph contact_graph(const WeaveSpec& w, const AnalysisConfig& cfg) {
  return contact_graph(w, analyze_crossings(w, cfg));
}

PeriodicGraph crossing_graph(const WeaveSpec& w, const CrossingAnalysis& a) {
  const double L = w.lattice.period();
  PeriodicGraph g;
  g.lattice = w.lattice;
  g.node_count = a.clusters.size();

  struct Event {
    double param;
    std::size_t cluster;
    Vec3 shift;
  };
  std::vector<std::vector<Event>> events(w.helices.size());
  for (std::size_t c = 0; c < a.clusters.size(); ++c) {
    const auto& cl = a.clusters[c];
    for (std::size_t m = 0; m < cl.members.size(); ++m) {
      const Contact& k = a.contacts[cl.members[m]];
      const Vec3& s = cl.shifts[m];
      events[k.helix_i].push_back({k.witness.s, c, -1.0 * s});
      events[k.helix_j].push_back({k.witness.t, c, -1.0 * (s + k.witness.translation)});
    }
  }
  for (std::size_t h = 0; h < w.helices.size(); ++h) {
    auto& ev = events[h];
    if (ev.empty()) continue;
    std::stable_sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.param < y.param; });
    const HelixSpec& spec = w.helices[h];
    const int turns = turns_per_repeat(spec, w.lattice);
    const Vec3 repeat = (turns * spec.pitch) * frame_for_direction(spec.direction).d;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      const Event& x = ev[k];
      const bool wrap = k + 1 == ev.size();
      const Event& y = wrap ? ev[0] : ev[k + 1];
      const Vec3 ys = wrap ? y.shift + repeat : y.shift;
      if (x.cluster == y.cluster && norm(ys - x.shift) <= 1e-6 * L) continue;
      g.add_edge(x.cluster, y.cluster, ys - x.shift);
    }
  }
  return g;
}

NetSummary net_summary(const PeriodicGraph& g, int shells) {
  NetSummary out;
  const double L = g.lattice.period();
  // Distinct neighbors per node in the infinite graph.
  std::vector<std::vector<std::pair<std::size_t, std::array<long, 3>>>> nbr(g.node_count);
  for (const auto& e : g.edges) {
    auto key = std::make_pair(e.v, shift_key(e.translation, L));
    auto& list = nbr[e.u];
    if (std::find(list.begin(), list.end(), key) == list.end()) list.push_back(key);
  }
  out.min_degree = g.node_count ? std::numeric_limits<int>::max() : 0;
  for (const auto& list : nbr) {
    const int d = static_cast<int>(list.size());
    out.min_degree = std::min(out.min_degree, d);
    out.max_degree = std::max(out.max_degree, d);
  }
  out.all_degree_three = g.node_count > 0 && out.min_degree == 3 && out.max_degree == 3;

  // Girth by BFS from every home-cell node over the unfolding.
  const long bound = 2L * shells;
  using Key = std::array<long, 4>;
  int girth = 0;
  for (std::size_t root = 0; root < g.node_count; ++root) {
    std::unordered_map<Key, std::pair<int, Key>, KeyHash> info;  // dist, parent
    const Key r{static_cast<long>(root), 0, 0, 0};
    info[r] = {0, {-1, 0, 0, 0}};
    std::deque<Key> queue{r};
    int best = 0;
    while (!queue.empty()) {
      const Key x = queue.front();
      queue.pop_front();
      const auto [dx, px] = info[x];
      if (best && 2 * dx + 1 >= best) break;
      for (const auto& [v, t] : nbr[static_cast<std::size_t>(x[0])]) {
        const Key y{static_cast<long>(v), x[1] + t[0], x[2] + t[1], x[3] + t[2]};
        if (std::abs(y[1]) > bound || std::abs(y[2]) > bound || std::abs(y[3]) > bound) continue;
        if (y == px) continue;
        auto it = info.find(y);
        if (it == info.end()) {
          info[y] = {dx + 1, x};
          queue.push_back(y);
        } else {
          const int cyc = dx + it->second.first + 1;
          if (!best || cyc < best) best = cyc;
        }
      }
    }
    if (best && (!girth || best < girth)) girth = best;
  }
  out.girth = girth;
  return out;
}

bool laves_check(const PeriodicGraph& g, int shells) {
  const NetSummary s = net_summary(g, shells);
  return s.all_degree_three && s.girth == 10;
}

ChiralityCensus chirality_census(const WeaveSpec& w, const PeriodicGraph& contacts) {
  ChiralityCensus out;
  for (const auto& h : w.helices) {
    if (h.radius <= 0.0) continue;
    (h.handedness > 0 ? out.right_handed : out.left_handed)++;
  }
  const auto comps = contacts.components();
  out.components = static_cast<int>(comps.size());
  if (out.right_handed == 0 || out.left_handed == 0) {
    out.chirality = ChiralityClass::One;
    return out;
  }
  auto hands = [&](const std::vector<std::size_t>& comp) {
    int r = 0, l = 0;
    for (std::size_t k : comp) {
      const auto& h = w.helices[k];
      if (h.radius <= 0.0) continue;
      (h.handedness > 0 ? r : l)++;
    }
    return std::make_pair(r, l);
  };
  if (comps.size() == 1) {
    out.chirality = ChiralityClass::Both;
    return out;
  }
  if (comps.size() == 2) {
    const auto a = hands(comps[0]), b = hands(comps[1]);
    const bool a_right = a.first > 0 && a.second == 0, a_left = a.second > 0 && a.first == 0;
    const bool b_right = b.first > 0 && b.second == 0, b_left = b.second > 0 && b.first == 0;
    if ((a_right && b_left) || (a_left && b_right)) {
      out.chirality = ChiralityClass::Double;
      return out;
    }
  }
  std::ostringstream os;
  os << "mixed handedness (" << out.right_handed << " right, " << out.left_handed << " left) across "
     << comps.size() << " contact-graph components";
  throw Error(ErrorKind::AmbiguousChirality, os.str());
}

ChiralityCensus chirality_census(const WeaveSpec& w, const AnalysisConfig& cfg) {
  return chirality_census(w, contact_graph(w, cfg));
}

}  // namespace tphw
