// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cctype>
#include <string>
#include <vector>

#include "table_rows.hpp"
#include "tphw/catalog.hpp"
#include "tphw/crossing.hpp"
#include "tphw/error.hpp"

using namespace tphw;

using oracle::Row;
using oracle::table;

TEST_CASE("catalog transcription row by row") {
  const auto& c = catalog();
  REQUIRE(c.size() == table().size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Row& r = table()[k];
    const auto& e = c[k].expected;
    CAPTURE(r.name);
    CHECK(c[k].name == r.name);
    CHECK(to_string(e.packing) == r.packing);
    CHECK(e.helices_per_crossing == r.per_crossing);
    CHECK(e.helices_per_unit == r.per_unit);
    CHECK(to_string(e.chirality) == r.chirality);
    CHECK(e.crossing_types == r.types);
    CHECK(to_string(e.tier) == std::string(1, r.tier));
  }
}

TEST_CASE("lookup by name and alias") {
  for (const auto& e : catalog()) {
    CHECK(find_entry(e.name) == &e);
    CHECK(find_entry(e.alias) == &e);
    std::string up = e.alias;
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    CHECK(find_entry(up) == &e);
  }
  CHECK(find_entry("nosuch") == nullptr);
}

TEST_CASE("construction status follows the tier") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    if (e.expected.tier == Tier::C) {
      CHECK(e.recipe.kind == RecipeKind::None);
      CHECK_THROWS_AS(build_weave(e.name), Error);
      continue;
    }
    const WeaveSpec w = build_weave(e.name);
    CHECK(w.constructed());
    CHECK(static_cast<int>(w.helices.size()) == e.expected.helices_per_unit);
    CHECK_NOTHROW(check_invariants(w));
    for (const auto& h : w.helices) CHECK(h.tube_radius == e.recipe.tube_radius);
  }
  try {
    build_weave("nosuch");
    FAIL("expected UnknownWeave");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownWeave);
  }
}

TEST_CASE("catalog_entries mirrors the table") {
  const auto ws = catalog_entries();
  REQUIRE(ws.size() == 19);
  CHECK_FALSE(ws[0].constructed());
  CHECK(ws[0].helices.empty());
  CHECK(ws[2].constructed());
}

TEST_CASE("overrides") {
  Overrides o;
  CHECK(o.empty());
  o.radius = 0.25;
  o.tube_radius = 0.01;
  const WeaveSpec w = build_weave("100-triple-laves", o);
  for (const auto& h : w.helices) {
    CHECK(h.radius == 0.25);
    CHECK(h.tube_radius == 0.01);
  }
  CHECK(w.lattice.body_centered());
  o = {};
  o.radius = -1;
  CHECK_THROWS_AS(build_weave("100-gyroid", o), Error);
}

TEST_CASE("chirality census follows the listed class") {
  for (const auto& e : catalog()) {
    if (e.expected.tier != Tier::A) continue;
    CAPTURE(e.name);
    const WeaveSpec w = build_weave(e.name);
    int right = 0, left = 0;
    for (const auto& h : w.helices) (h.handedness > 0 ? right : left)++;
    const ChiralityCensus c = chirality_census(w);
    CHECK(c.chirality == e.expected.chirality);
    switch (e.expected.chirality) {
      case ChiralityClass::One:
        CHECK((right == 0 || left == 0));
        break;
      case ChiralityClass::Double: {
        REQUIRE(c.components == 2);
        const auto comps = contact_graph(w).components();
        for (const auto& comp : comps) {
          int r = 0;
          for (auto k : comp) r += w.helices[k].handedness > 0;
          CHECK((r == 0 || r == static_cast<int>(comp.size())));
          CHECK(comp.size() * 2 == w.helices.size());
        }
        break;
      }
      case ChiralityClass::Both:
        CHECK(right > 0);
        CHECK(left > 0);
        break;
    }
  }
}
