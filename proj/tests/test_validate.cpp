// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "tphw/catalog.hpp"
#include "tphw/error.hpp"
#include "tphw/validate.hpp"

using namespace tphw;

TEST_CASE("report fields for a passing weave") {
  const ValidationReport r = validate_weave(build_weave("100-trigonal-laves"));
  CHECK(r.pass);
  CHECK(r.counts.actual == 6);
  CHECK(r.periodicity.pass);
  CHECK(r.clearance.pass);
  CHECK(r.crossings.pass);
  REQUIRE(r.chirality.census);
  CHECK(r.chirality.census->chirality == ChiralityClass::Double);
  CHECK(r.laves.applicable);
  CHECK(r.laves.pass);
  const std::string text = format_report(r);
  CHECK(text.find("overall      PASS") != std::string::npos);
}

TEST_CASE("overall verdict is the conjunction of the gating checks") {
  WeaveSpec w = build_weave("100-simple-annular");
  w = with_tube_radius(w, 0.3);  // tubes overlap
  const ValidationReport r = validate_weave(w);
  CHECK_FALSE(r.clearance.pass);
  CHECK_FALSE(r.pass);

  WeaveSpec dup = build_weave("100-simple-annular");
  dup.helices[1] = dup.helices[0];
  const ValidationReport d = validate_weave(dup);
  CHECK_FALSE(d.periodicity.pass);
  CHECK_FALSE(d.analyzed);
  CHECK_FALSE(d.pass);
}

TEST_CASE("json report round-trips byte for byte") {
  const ValidationReport r = validate_weave(build_weave("100-gyroid"));
  const std::string once = dump_json(report_to_json(r));
  CHECK(dump_json(Json::parse(once)) == once);
  const Json j = Json::parse(once);
  CHECK(j["name"] == "⟨100⟩ Gyroid");
  CHECK(j["pass"] == true);
  CHECK(j["checks"]["clearance"]["pair"].size() == 2);
  CHECK(j["checks"]["clearance"]["translation"].size() == 3);
  CHECK(j["checks"]["crossings"]["histogram"].is_array());
  CHECK(j["checks"]["laves"]["applicable"] == false);
}

TEST_CASE("unconstructed weaves are refused") {
  CHECK_THROWS_AS(validate_weave(catalog_entries()[0]), Error);
}
