// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <string>

#include "tphw/catalog.hpp"
#include "tphw/error.hpp"
#include "tphw/io.hpp"

using namespace tphw;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* msg = nullptr) {
  try {
    parse_weave(text);
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::InvalidArgument;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("every catalog weave round-trips exactly") {
  for (const WeaveSpec& w : catalog_entries()) {
    CAPTURE(w.name);
    const std::string text = serialize_weave(w);
    const WeaveSpec back = parse_weave(text);
    CHECK(back == w);
    CHECK(serialize_weave(back) == text);
  }
}

TEST_CASE("provenance round-trips") {
  WeaveSpec w = build_weave("100-gyroid");
  w.provenance = Provenance{"test", 5, 0.25, 1e-5, 42, 1e-12, 0.123456789012345678};
  CHECK(parse_weave(serialize_weave(w)) == w);
}

TEST_CASE("body centring is written and read") {
  const WeaveSpec w = build_weave("100-braid-laves");
  const std::string text = serialize_weave(w);
  CHECK(text.find("\"lattice_centering\": \"body\"") != std::string::npos);
  CHECK(parse_weave(text).lattice.body_centered());
}

TEST_CASE("malformed files") {
  const std::string good = serialize_weave(build_weave("100-simple-trio"));
  std::string msg;
  CHECK(parse_kind("{ \"name\": ", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("line") != std::string::npos);

  CHECK(parse_kind(replace(good, "\"radius\":", "\"radios\":"), &msg) == ErrorKind::ParseError);
  CHECK(msg.find("helices[0]") != std::string::npos);

  CHECK(parse_kind(replace(good, "\"handedness\": 1", "\"handedness\": 2"), &msg) ==
        ErrorKind::InvariantViolation);
  CHECK(msg.find("handedness") != std::string::npos);

  CHECK(parse_kind(replace(good, "\"lattice_period\": 1", "\"lattice_period\": -1")) ==
        ErrorKind::InvariantViolation);
  CHECK(parse_kind(replace(good, "\"tier\": \"A\"", "\"tier\": \"D\"")) == ErrorKind::ParseError);
  CHECK(parse_kind(replace(good, "\"name\"", "\"extra\": 1, \"name\"")) == ErrorKind::ParseError);
  CHECK(parse_kind(replace(good, "\"pitch\": 1", "\"pitch\": 0.3")) ==
        ErrorKind::IncommensurateHelix);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "tphw_io_test";
  std::filesystem::create_directories(dir);
  const WeaveSpec w = build_weave("100-trefoil-laves");
  save_weave(w, dir / "w.weave.json");
  CHECK(load_weave(dir / "w.weave.json") == w);
  try {
    load_weave(dir / "missing.json");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
  write_text_file(dir / "bad.json", "[1, 2");
  try {
    load_weave(dir / "bad.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    const std::string what = e.what();
    CHECK(what.find("bad.json") != std::string::npos);
    CHECK(what.find("ParseError: ParseError") == std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 0.0) == "null");
  const Json j = Json::parse(R"({"a": [1.5, 2, 3], "b": {"c": 0.25}})");
  const std::string once = dump_json(j);
  CHECK(dump_json(Json::parse(once)) == once);
}
