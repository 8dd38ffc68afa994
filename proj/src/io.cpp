// SPDX-License-Identifier: Apache-2.0
#include "tphw/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "tphw/error.hpp"

namespace tphw {
namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

void reject_unknown(const Json& obj, const std::string& where,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) field_error(where.empty() ? key : where + "." + key, "unknown field");
  }
}

const Json& member(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) field_error(field, "not finite");
  return v;
}

long long integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<long long>();
}

std::string string(const Json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

Vec3 vec3(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) field_error(field, "expected an array of 3 numbers");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]"), number(j[2], field + "[2]")};
}

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

void dump(const Json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(k).dump() + ": ";
        dump(v, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Short numeric arrays stay on one line.
      bool flat = j.size() <= 4;
      for (const auto& v : j) flat = flat && v.is_primitive();
      out += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",\n";
        if (!flat) out += pad;
        dump(j[i], out, depth + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // no "-0": it would not survive a parse
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += '\n';
  return out;
}

Json weave_to_json(const WeaveSpec& w) {
  Json j;
  j["name"] = w.name;
  j["lattice_period"] = w.lattice.period();
  if (w.lattice.body_centered()) j["lattice_centering"] = "body";
  j["construction_status"] = std::string(to_string(w.status));
  Json hs = Json::array();
  for (const auto& h : w.helices) {
    Json x;
    x["anchor"] = vec_json(h.anchor);
    x["direction"] = vec_json(h.direction);
    x["radius"] = h.radius;
    x["pitch"] = h.pitch;
    x["phase"] = h.phase;
    x["handedness"] = h.handedness;
    x["tube_radius"] = h.tube_radius;
    hs.push_back(std::move(x));
  }
  j["helices"] = std::move(hs);
  const auto& e = w.expected;
  Json ex;
  ex["packing"] = std::string(to_string(e.packing));
  ex["helices_per_crossing"] = e.helices_per_crossing;
  ex["helices_per_unit"] = e.helices_per_unit;
  ex["chirality"] = std::string(to_string(e.chirality));
  ex["crossing_types"] = e.crossing_types;
  ex["tier"] = std::string(to_string(e.tier));
  j["expected"] = std::move(ex);
  if (w.provenance) {
    const auto& p = *w.provenance;
    Json pj;
    pj["method"] = p.method;
    pj["max_iterations"] = p.max_iterations;
    pj["step_init"] = p.step_init;
    pj["step_min"] = p.step_min;
    pj["seed"] = p.seed;
    pj["tolerance"] = p.tolerance;
    pj["objective"] = p.objective;
    j["provenance"] = std::move(pj);
  }
  return j;
}

WeaveSpec weave_from_json(const Json& j) {
  if (!j.is_object()) field_error("<root>", "expected an object");
  reject_unknown(j, "", {"name", "lattice_period", "lattice_centering", "construction_status",
                         "helices", "expected", "provenance"});
  WeaveSpec w;
  w.name = string(member(j, "", "name"), "name");
  const double period = number(member(j, "", "lattice_period"), "lattice_period");
  if (!(period > 0)) throw Error(ErrorKind::InvariantViolation, "lattice_period");
  Centering centering = Centering::Primitive;
  if (auto it = j.find("lattice_centering"); it != j.end()) {
    const std::string c = string(*it, "lattice_centering");
    if (c == "body") centering = Centering::Body;
    else if (c != "primitive") field_error("lattice_centering", "expected \"primitive\" or \"body\"");
  }
  w.lattice = Lattice(period, centering);
  const std::string status = string(member(j, "", "construction_status"), "construction_status");
  auto st = status_from_string(status);
  if (!st) field_error("construction_status", "expected \"constructed\" or \"unconstructed\"");
  w.status = *st;

  const Json& hs = member(j, "", "helices");
  if (!hs.is_array()) field_error("helices", "expected an array");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "helices[" + std::to_string(i) + "]";
    const Json& x = hs[i];
    if (!x.is_object()) field_error(where, "expected an object");
    reject_unknown(x, where, {"anchor", "direction", "radius", "pitch", "phase", "handedness",
                              "tube_radius"});
    HelixSpec h;
    h.anchor = vec3(member(x, where, "anchor"), where + ".anchor");
    h.direction = vec3(member(x, where, "direction"), where + ".direction");
    h.radius = number(member(x, where, "radius"), where + ".radius");
    h.pitch = number(member(x, where, "pitch"), where + ".pitch");
    h.phase = number(member(x, where, "phase"), where + ".phase");
    const long long hand = integer(member(x, where, "handedness"), where + ".handedness");
    if (hand != 1 && hand != -1)
      throw Error(ErrorKind::InvariantViolation, "handedness (" + where + ")");
    h.handedness = static_cast<int>(hand);
    h.tube_radius = number(member(x, where, "tube_radius"), where + ".tube_radius");
    w.helices.push_back(h);
  }

  const Json& ex = member(j, "", "expected");
  if (!ex.is_object()) field_error("expected", "expected an object");
  reject_unknown(ex, "expected", {"packing", "helices_per_crossing", "helices_per_unit",
                                  "chirality", "crossing_types", "tier"});
  auto& e = w.expected;
  auto pk = packing_from_string(string(member(ex, "expected", "packing"), "expected.packing"));
  if (!pk) field_error("expected.packing", "unknown packing label");
  e.packing = *pk;
  const Json& hpc = member(ex, "expected", "helices_per_crossing");
  if (!hpc.is_array()) field_error("expected.helices_per_crossing", "expected an array");
  for (std::size_t i = 0; i < hpc.size(); ++i)
    e.helices_per_crossing.push_back(static_cast<int>(
        integer(hpc[i], "expected.helices_per_crossing[" + std::to_string(i) + "]")));
  e.helices_per_unit = static_cast<int>(
      integer(member(ex, "expected", "helices_per_unit"), "expected.helices_per_unit"));
  auto ch = chirality_from_string(string(member(ex, "expected", "chirality"), "expected.chirality"));
  if (!ch) field_error("expected.chirality", "expected \"one\", \"double\" or \"both\"");
  e.chirality = *ch;
  const Json& ct = member(ex, "expected", "crossing_types");
  if (!ct.is_array()) field_error("expected.crossing_types", "expected an array");
  for (std::size_t i = 0; i < ct.size(); ++i)
    e.crossing_types.push_back(string(ct[i], "expected.crossing_types[" + std::to_string(i) + "]"));
  auto tier = tier_from_string(string(member(ex, "expected", "tier"), "expected.tier"));
  if (!tier) field_error("expected.tier", "expected \"A\", \"B\" or \"C\"");
  e.tier = *tier;

  if (auto it = j.find("provenance"); it != j.end()) {
    const Json& p = *it;
    if (!p.is_object()) field_error("provenance", "expected an object");
    reject_unknown(p, "provenance", {"method", "max_iterations", "step_init", "step_min", "seed",
                                     "tolerance", "objective"});
    Provenance pv;
    pv.method = string(member(p, "provenance", "method"), "provenance.method");
    pv.max_iterations = static_cast<int>(
        integer(member(p, "provenance", "max_iterations"), "provenance.max_iterations"));
    pv.step_init = number(member(p, "provenance", "step_init"), "provenance.step_init");
    pv.step_min = number(member(p, "provenance", "step_min"), "provenance.step_min");
    pv.seed = static_cast<std::uint64_t>(integer(member(p, "provenance", "seed"), "provenance.seed"));
    pv.tolerance = number(member(p, "provenance", "tolerance"), "provenance.tolerance");
    pv.objective = number(member(p, "provenance", "objective"), "provenance.objective");
    w.provenance = pv;
  }

  check_invariants(w);
  return w;
}

std::string serialize_weave(const WeaveSpec& w) { return dump_json(weave_to_json(w)); }

WeaveSpec parse_weave(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return weave_from_json(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

void save_weave(const WeaveSpec& w, const std::filesystem::path& path) {
  write_text_file(path, serialize_weave(w));
}

WeaveSpec load_weave(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_weave(text);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::ParseError)) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw Error(ErrorKind::ParseError, path.string() + ": " + msg);
  }
}

}  // namespace tphw
