// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tphw/proximity.hpp"
#include "tphw/weave.hpp"

namespace tphw {

/// Contact and clustering tolerances, as fractions of the lattice period.
struct AnalysisConfig {
  double gap_tol = 0.02;
  double cluster_radius = 0.25;
  int grid_n = kDefaultGridN;
};

/// A spatially local group of contacts. `shifts[k]` is the lattice vector
/// added to contact `members[k]` to place the cluster contiguously.
struct CrossingCluster {
  std::vector<std::size_t> members;
  std::vector<Vec3> shifts;
  /// The cluster links to one of its own lattice images.
  bool percolating = false;
};

/// Single-linkage clustering of contact midpoints under the periodic metric.
/// Clusters are ordered by their lexicographically smallest reduced midpoint.
std::vector<CrossingCluster> cluster_crossings(const std::vector<Contact>& contacts,
                                               const Lattice& lattice, double cluster_radius);

/// Identity of one curve in the infinite weave: helix index plus a lattice
/// shift, equal when the shifts differ by a translation along the axis.
struct CurveRef {
  std::size_t helix = 0;
  Vec3 shift;
};

struct CrossingSignature {
  int participants = 0;
  /// Contacts per unordered pair of participating curves, ascending.
  std::vector<int> pair_contacts;
  double cluster_diameter = 0.0;
  /// Smallest singular value of the centered contact midpoints.
  double coplanarity = 0.0;
  bool percolating = false;
  std::vector<CurveRef> curves;
};

CrossingSignature signature_of(const WeaveSpec& w, const std::vector<Contact>& contacts,
                               const CrossingCluster& cluster);

/// The part of a signature that decides its class.
struct SignatureClass {
  int participants = 0;
  std::vector<int> pair_contacts;

  auto operator<=>(const SignatureClass&) const = default;
  bool operator==(const SignatureClass&) const = default;
};

std::string to_string(const SignatureClass& c);

using SignatureHistogram = std::map<SignatureClass, int>;

struct CrossingAnalysis {
  std::vector<Contact> contacts;
  std::vector<CrossingCluster> clusters;
  std::vector<CrossingSignature> signatures;
  SignatureHistogram histogram;
};

/// Contacts, clusters and signatures for one periodic unit. Tolerances are
/// taken relative to the lattice period.
CrossingAnalysis analyze_crossings(const WeaveSpec& w, const AnalysisConfig& cfg = {});

struct Classification {
  SignatureHistogram histogram;
  bool pass = false;
  /// Crossing-type name per class, taken from the expected table entry.
  std::vector<std::string> names;
  std::string detail;
};

/// PASS iff the number of signature classes equals the number of table
/// crossing entries, the participant counts match, and no cluster percolates.
Classification classify_weave(const WeaveSpec& w, const AnalysisConfig& cfg = {});
Classification classify_analysis(const WeaveSpec& w, const CrossingAnalysis& a);

/// Quotient graph of a periodic net: edge (u, v, T) joins node u in the home
/// cell to node v translated by T.
struct PeriodicEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Vec3 translation;
};

struct PeriodicGraph {
  std::size_t node_count = 0;
  std::vector<PeriodicEdge> edges;
  Lattice lattice;

  /// Adds (u,v,T) and (v,u,-T) unless already present.
  void add_edge(std::size_t u, std::size_t v, const Vec3& t);
  bool has_edge(std::size_t u, std::size_t v, const Vec3& t) const;
  bool symmetric() const;
  /// Weakly connected components of the quotient graph, as node lists.
  std::vector<std::vector<std::size_t>> components() const;
  /// Subgraph induced on `nodes` (renumbered in the given order).
  PeriodicGraph induced(const std::vector<std::size_t>& nodes) const;
};

/// Helix contact graph: one node per helix of the unit, one edge per pair
/// of curves meeting in a crossing.
PeriodicGraph contact_graph(const WeaveSpec& w, const CrossingAnalysis& a);
PeriodicGraph contact_graph(const WeaveSpec& w, const AnalysisConfig& cfg = {});

/// Crossing graph: one node per crossing of the unit; two crossings are
/// adjacent when some helix visits them consecutively.
PeriodicGraph crossing_graph(const WeaveSpec& w, const CrossingAnalysis& a);

struct NetSummary {
  bool all_degree_three = false;
  int min_degree = 0;
  int max_degree = 0;
  int girth = 0;  // 0 when acyclic within the unfolding
};

/// Degree and girth of the periodic graph unfolded over `shells` cells.
NetSummary net_summary(const PeriodicGraph& g, int shells = 3);

/// True iff the unfolded net is 3-regular with girth 10, the signature of
/// the (10,3)-a Laves net.
bool laves_check(const PeriodicGraph& g, int shells = 3);

struct ChiralityCensus {
  ChiralityClass chirality = ChiralityClass::One;
  int right_handed = 0;
  int left_handed = 0;
  int components = 0;
};

/// Throws AmbiguousChirality when the component pattern fits no class.
ChiralityCensus chirality_census(const WeaveSpec& w, const PeriodicGraph& contacts);
ChiralityCensus chirality_census(const WeaveSpec& w, const AnalysisConfig& cfg = {});

}  // namespace tphw
