// SPDX-License-Identifier: Apache-2.0
#include "tphw/weave.hpp"

#include <array>
#include <utility>

#include "tphw/error.hpp"

namespace tphw {

namespace {

constexpr std::array<std::pair<PackingLabel, std::string_view>, 7> kPacking{{
    {PackingLabel::PiPlusMinus, "PI_PLUS_MINUS"},
    {PackingLabel::PiStar, "PI_STAR"},
    {PackingLabel::Gamma, "GAMMA"},
    {PackingLabel::OmegaPlusMinus, "OMEGA_PLUS_MINUS"},
    {PackingLabel::SigmaPlusMinus, "SIGMA_PLUS_MINUS"},
    {PackingLabel::SigmaStar, "SIGMA_STAR"},
    {PackingLabel::None, "NONE"},
}};
constexpr std::array<std::pair<ChiralityClass, std::string_view>, 3> kChirality{{
    {ChiralityClass::One, "one"}, {ChiralityClass::Double, "double"}, {ChiralityClass::Both, "both"}}};
constexpr std::array<std::pair<Tier, std::string_view>, 3> kTier{{
    {Tier::A, "A"}, {Tier::B, "B"}, {Tier::C, "C"}}};
constexpr std::array<std::pair<ConstructionStatus, std::string_view>, 2> kStatus{{
    {ConstructionStatus::Constructed, "constructed"},
    {ConstructionStatus::Unconstructed, "unconstructed"}}};

template <typename Table, typename E>
std::string_view lookup(const Table& table, E v) {
  for (const auto& [e, s] : table)
    if (e == v) return s;
  return "?";
}

template <typename E, typename Table>
std::optional<E> reverse(const Table& table, std::string_view s) {
  for (const auto& [e, name] : table)
    if (name == s) return e;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PackingLabel v) { return lookup(kPacking, v); }
std::string_view to_string(ChiralityClass v) { return lookup(kChirality, v); }
std::string_view to_string(Tier v) { return lookup(kTier, v); }
std::string_view to_string(ConstructionStatus v) { return lookup(kStatus, v); }
std::optional<PackingLabel> packing_from_string(std::string_view s) {
  return reverse<PackingLabel>(kPacking, s);
}
std::optional<ChiralityClass> chirality_from_string(std::string_view s) {
  return reverse<ChiralityClass>(kChirality, s);
}
std::optional<Tier> tier_from_string(std::string_view s) { return reverse<Tier>(kTier, s); }
std::optional<ConstructionStatus> status_from_string(std::string_view s) {
  return reverse<ConstructionStatus>(kStatus, s);
}

void check_invariants(const WeaveSpec& w) {
  const auto& e = w.expected;
  if (e.helices_per_unit < 1)
    throw Error(ErrorKind::InvariantViolation, "expected.helices_per_unit");
  if (e.helices_per_crossing.empty() || e.helices_per_crossing.size() > 2)
    throw Error(ErrorKind::InvariantViolation, "expected.helices_per_crossing");
  for (int c : e.helices_per_crossing)
    if (c < 2) throw Error(ErrorKind::InvariantViolation, "expected.helices_per_crossing");

  for (const auto& h : w.helices) check_invariants(h);
  std::vector<CanonicalHelix> canon;
  canon.reserve(w.helices.size());
  for (const auto& h : w.helices) canon.push_back(canonicalize(h, w.lattice));
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j)
      if (same_canonical(canon[i], canon[j], w.lattice))
        throw Error(ErrorKind::InvariantViolation,
                    "distinct canonical forms (helices " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide)");

  if (w.constructed()) {
    if (w.helices.empty()) throw Error(ErrorKind::InvariantViolation, "helices (empty)");
    if (static_cast<int>(w.helices.size()) != e.helices_per_unit)
      throw Error(ErrorKind::InvariantViolation,
                  "helix count " + std::to_string(w.helices.size()) +
                      " != helices_per_unit " + std::to_string(e.helices_per_unit));
  }
}

void require_constructed(const WeaveSpec& w) {
  if (!w.constructed() || w.helices.empty())
    throw Error(ErrorKind::UnconstructedWeave, "weave '" + w.name + "' has no geometry");
}

WeaveSpec scaled(const WeaveSpec& w, double s) {
  WeaveSpec out = w;
  out.lattice = w.lattice.scaled(s);
  for (auto& h : out.helices) {
    h.anchor *= s;
    h.radius *= s;
    h.pitch *= s;
    h.tube_radius *= s;
  }
  return out;
}

WeaveSpec transformed(const WeaveSpec& w, const Mat3& q, const Vec3& shift) {
  WeaveSpec out = w;
  for (auto& h : out.helices) h = transform(h, q, shift);
  return out;
}

WeaveSpec with_tube_radius(const WeaveSpec& w, double rho) {
  WeaveSpec out = w;
  for (auto& h : out.helices) h.tube_radius = rho;
  return out;
}

}  // namespace tphw
