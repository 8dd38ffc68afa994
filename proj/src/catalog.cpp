// SPDX-License-Identifier: Apache-2.0
#include "tphw/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "tphw/error.hpp"
#include "tphw/recipes.hpp"

namespace tphw {
namespace {

using enum PackingLabel;
using enum ChiralityClass;
using enum Tier;

constexpr double kPi = std::numbers::pi;

// Tier A numbers come from clearance maximization constrained to the
// entry's crossing class (coordinate search, step 0.05 -> 1e-6, seed 0,
// grid 48), then tube radius = (d_min - 0.005) / 2 at grid 96. The Laves
// radii are midpoints of the class intervals measured at fixed phase.
constexpr std::string_view kClassConstrained = "class-constrained clearance maximization";
constexpr std::string_view kMidpoint = "midpoint of the crossing-class radius interval";
constexpr std::string_view kBandPick = "radius inside the single-component pair band, phase 0";
constexpr std::string_view kBestEffort = "symmetric axis lines, radius not tuned";

ExpectedProperties row(PackingLabel packing, std::vector<int> per_crossing, int per_unit,
                       ChiralityClass chirality, std::vector<std::string> types, Tier tier) {
  return {packing, std::move(per_crossing), per_unit, chirality, std::move(types), tier};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string alias, ExpectedProperties e, FrozenRecipe r) {
    c.push_back({std::move(name), std::move(alias), std::move(e), r});
  };
  using K = RecipeKind;

  add("Stacked Hexagonal MF", "stacked-hexagonal-mf",
      row(None, {3, 2}, 3, One, {"trio", "pair"}, C), {});
  add("Strucwire®", "strucwire", row(None, {4, 2}, 4, One, {"quartet", "pair"}, C), {});

  add("⟨100⟩ Simple Annular", "100-simple-annular",
      row(PiPlusMinus, {3}, 3, One, {"annular"}, A),
      {K::Simple100, 0.2, 5.740812988, 0.17315, 0.0, 0.39, 1, 1, 0, kClassConstrained});
  add("⟨100⟩ Simple Trefoil", "100-simple-trefoil",
      row(PiPlusMinus, {3}, 3, One, {"trefoil"}, A),
      {K::Simple100, 0.2, 0.528118297, 0.12261, 0.0, 0.643346331, 1, 1, 0, kClassConstrained});
  add("⟨100⟩ Simple Trio", "100-simple-trio", row(PiPlusMinus, {3}, 3, One, {"trio"}, A),
      {K::Simple100, 0.225, 5.846226613, 0.16336, 0.0, 0.357148114, 1, 1, 0, kClassConstrained});

  add("⟨100⟩ Trigonal Laves", "100-trigonal-laves",
      row(PiPlusMinus, {3}, 6, Double, {"trigonal"}, A),
      {K::Laves100, 0.232742, 0.0, 0.02314, 0, 0, 1, 1, 0, kMidpoint});
  add("⟨100⟩ Trefoil Laves", "100-trefoil-laves",
      row(PiPlusMinus, {3}, 6, Double, {"trefoil"}, A),
      {K::Laves100, 0.16, 0.882446289, 0.00502, 0, 0, 1, 1, 0, kClassConstrained});
  add("⟨100⟩ Braid Laves", "100-braid-laves",
      row(PiPlusMinus, {6}, 6, Double, {"braid"}, A),
      {K::Laves100, 0.292383, kPi, 0.02956, 0, 0, 1, 1, 0, kMidpoint});
  add("⟨100⟩ Triple Laves", "100-triple-laves",
      row(PiPlusMinus, {2}, 6, Double, {"pair"}, A),
      {K::Laves100, 0.232637, kPi, 0.07393, 0, 0, 1, 1, 0, kMidpoint});
  add("⟨100⟩ Gyroid", "100-gyroid", row(PiStar, {2}, 12, Both, {"saddle"}, A),
      {K::Gyroid100, 0.2, 0.0, 0.07249, 0, 0, 1, 1, 0, kBandPick});

  add("⟨100⟩ Tetrahedral", "100-tetrahedral",
      row(PiStar, {6}, 6, One, {"tetrahedral"}, B),
      {K::Tetra100, 0.27, 0.0, 0.04628, 0, 0, 1, 1, 0, kBestEffort});
  add("⟨100⟩ Expanded Tetrahedral", "100-expanded-tetrahedral",
      row(PiStar, {6}, 6, One, {"exp. tetra."}, B),
      {K::Tetra100, 0.31, 0.0, 0.01634, 0, 0, 1, 1, 0, kBestEffort});
  add("⟨111⟩ Gamma", "111-gamma", row(Gamma, {2}, 12, One, {"pair"}, B),
      {K::Axial111, 0.12, 0.0, 0.05570, 0, 0, 1, 3, 0, kBestEffort});
  add("⟨111⟩ Trio", "111-trio", row(OmegaPlusMinus, {3}, 24, One, {"trio"}, B),
      {K::Axial111, 0.03, 0.0, 0.01878, 0, 0, 1, 2, 1, kBestEffort});
  add("⟨111⟩ Octahedral", "111-octahedral", row(OmegaPlusMinus, {2}, 12, One, {"pair"}, B),
      {K::Axial111, 0.09, 0.0, 0.00837, 0, 0, 1, 1, 1, kBestEffort});
  add("⟨111⟩ Expanded Octahedral", "111-expanded-octahedral",
      row(OmegaPlusMinus, {4}, 12, One, {"quatrefoil"}, B),
      {K::Axial111, 0.06, 0.0, 0.03511, 0, 0, 1, 1, 1, kBestEffort});
  add("⟨111⟩ Trigonal Laves", "111-trigonal-laves",
      row(SigmaPlusMinus, {3}, 8, Double, {"trigonal"}, B),
      {K::Axial111, 0.03, 0.0, 0.05915, 0, 0, 1, 1, 2, kBestEffort});
  add("⟨111⟩ Trefoil Laves", "111-trefoil-laves",
      row(SigmaPlusMinus, {3}, 8, Double, {"trefoil"}, B),
      {K::Axial111, 0.06, 0.0, 0.03259, 0, 0, 1, 1, 2, kBestEffort});
  add("⟨111⟩ Gyroid", "111-gyroid", row(SigmaStar, {2}, 16, Both, {"saddle"}, B),
      {K::Axial111, 0.03, 0.0, 0.01913, 0, 0, 1, 1, 3, kBestEffort});
  return c;
}

// Axis-line sets for the body-diagonal entries (units of L). Set 0 is the
// four-rod arrangement with the largest rod separation (sqrt(2)/4); the
// denser sets add translated copies of it chosen greedily on a 1/8 grid.
std::vector<recipes::AxisLine111> line_set(int which) {
  static const Vec3 kBase[4] = {{0.0, 0.75, 0.75}, {0.25, 0.5, 0.0}, {0.5, 0.75, 0.75},
                                {0.75, 0.0, 0.0}};
  static const Vec3 kShift[4] = {{0, 0, 0}, {0, 0, 0.25}, {0, 0, 0.125}, {0, 0.125, 0.125}};
  // which: 0 = 4 lines, 1 = 12 lines, 2 = 8 lines in two enantiomorphic
  // halves, 3 = 16 lines with both hands.
  const int copies = which == 0 ? 1 : which == 1 ? 3 : which == 2 ? 2 : 4;
  std::vector<recipes::AxisLine111> out;
  for (int c = 0; c < copies; ++c) {
    const int hand = (which >= 2 && c % 2 == 1) ? -1 : 1;
    for (int k = 0; k < 4; ++k) {
      Vec3 a = kBase[k] + kShift[c];
      a = {a.x - std::floor(a.x), a.y - std::floor(a.y), a.z - std::floor(a.z)};
      out.push_back({a, k, hand});
    }
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

}  // namespace

std::string_view to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::None: return "none";
    case RecipeKind::Simple100: return "simple-100";
    case RecipeKind::Laves100: return "laves-100";
    case RecipeKind::Gyroid100: return "gyroid-100";
    case RecipeKind::Tetra100: return "tetra-100";
    case RecipeKind::Axial111: return "axial-111";
  }
  return "none";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : catalog())
    if (e.name == name || e.alias == key || lower(e.name) == key) return &e;
  return nullptr;
}

Lattice recipe_lattice(const CatalogEntry& entry, double L) {
  return Lattice(L, entry.recipe.kind == RecipeKind::Laves100 ? Centering::Body
                                                               : Centering::Primitive);
}

WeaveSpec build_weave(std::string_view name, const Overrides& o) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw Error(ErrorKind::UnknownWeave, "no catalog entry named '" + std::string(name) + "'");
  if (e->recipe.kind == RecipeKind::None)
    throw Error(ErrorKind::UnconstructedWeave,
                "'" + e->name + "' has no construction; supply a weave file instead");

  const FrozenRecipe& r = e->recipe;
  const double radius = o.radius.value_or(r.radius);
  const double phase = o.phase.value_or(r.phase);
  const double tube = o.tube_radius.value_or(r.tube_radius);
  const int turns = o.turns.value_or(r.turns);
  if (radius < 0 || tube < 0) throw Error(ErrorKind::InvariantViolation, "radius");

  WeaveSpec w;
  w.name = e->name;
  w.lattice = recipe_lattice(*e);
  w.expected = e->expected;
  w.status = ConstructionStatus::Constructed;
  switch (r.kind) {
    case RecipeKind::Simple100:
      w.helices = recipes::simple100({o.anchor_x.value_or(r.anchor_x),
                                      o.anchor_y.value_or(r.anchor_y), radius, phase, 1, tube,
                                      turns});
      break;
    case RecipeKind::Laves100:
      w.helices = recipes::laves100({radius, phase, tube, turns});
      break;
    case RecipeKind::Gyroid100:
      w.helices = recipes::gyroid100({radius, phase, tube, turns});
      break;
    case RecipeKind::Tetra100:
      w.helices = recipes::tetra100({radius, phase, tube, turns});
      break;
    case RecipeKind::Axial111:
      w.helices = recipes::axial111({line_set(r.line_set), radius, phase, r.helices_per_axis,
                                     tube, turns});
      break;
    case RecipeKind::None:
      break;
  }
  check_invariants(w);
  return w;
}

std::vector<WeaveSpec> catalog_entries() {
  std::vector<WeaveSpec> out;
  for (const auto& e : catalog()) {
    if (e.recipe.kind == RecipeKind::None) {
      WeaveSpec w;
      w.name = e.name;
      w.lattice = recipe_lattice(e);
      w.expected = e.expected;
      w.status = ConstructionStatus::Unconstructed;
      out.push_back(std::move(w));
    } else {
      out.push_back(build_weave(e.name));
    }
  }
  return out;
}

}  // namespace tphw
