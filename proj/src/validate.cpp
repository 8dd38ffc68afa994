// SPDX-License-Identifier: Apache-2.0
#include "tphw/validate.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tphw/error.hpp"

namespace tphw {
namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

ValidationReport validate_weave(const WeaveSpec& w, const ValidationOptions& opt) {
  require_constructed(w);
  ValidationReport r;
  r.name = w.name;
  r.counts = {w.expected.helices_per_unit, static_cast<int>(w.helices.size()), false};
  r.counts.pass = r.counts.expected == r.counts.actual;

  auto& p = r.periodicity;
  p.commensurate = true;
  for (std::size_t i = 0; i < w.helices.size() && p.commensurate; ++i) {
    try {
      (void)turns_per_repeat(w.helices[i], w.lattice);
    } catch (const Error& e) {
      p.commensurate = false;
      p.detail = "helix " + std::to_string(i) + ": " + e.what();
    }
  }
  if (p.commensurate) {
    p.distinct = true;
    std::vector<CanonicalHelix> canon;
    for (const auto& h : w.helices) canon.push_back(canonicalize(h, w.lattice));
    for (std::size_t i = 0; i < canon.size() && p.distinct; ++i)
      for (std::size_t j = i + 1; j < canon.size() && p.distinct; ++j)
        if (same_canonical(canon[i], canon[j], w.lattice)) {
          p.distinct = false;
          p.detail = "helices " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        }
  }
  p.pass = p.commensurate && p.distinct;
  if (!p.pass) return r;

  r.analyzed = true;
  const double L = w.lattice.period();
  r.clearance.report = clearance(w, opt.analysis.grid_n);
  r.clearance.threshold = opt.min_gap * L;
  r.clearance.pass = r.clearance.report.min_gap >= r.clearance.threshold;

  const CrossingAnalysis a = analyze_crossings(w, opt.analysis);
  r.crossings = classify_analysis(w, a);

  r.chirality.expected = w.expected.chirality;
  try {
    r.chirality.census = chirality_census(w, contact_graph(w, a));
    r.chirality.pass = r.chirality.census->chirality == r.chirality.expected;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AmbiguousChirality) throw;
    r.chirality.detail = e.what();
  }

  r.laves.applicable = w.expected.chirality == ChiralityClass::Double;
  if (r.laves.applicable) {
    r.laves.net = net_summary(crossing_graph(w, a), opt.laves_shells);
    r.laves.pass = r.laves.net.all_degree_three && r.laves.net.girth == 10;
  }

  r.pass = r.counts.pass && r.clearance.pass && r.crossings.pass && r.chirality.pass;
  return r;
}

Json report_to_json(const ValidationReport& r, const ValidationOptions& opt) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  Json settings;
  settings["gap_tol"] = opt.analysis.gap_tol;
  settings["cluster_radius"] = opt.analysis.cluster_radius;
  settings["grid"] = opt.analysis.grid_n;
  settings["min_gap"] = opt.min_gap;
  j["settings"] = std::move(settings);

  Json checks;
  checks["counts"] = {{"expected", r.counts.expected}, {"actual", r.counts.actual},
                      {"pass", r.counts.pass}};
  checks["periodicity"] = {{"commensurate", r.periodicity.commensurate},
                           {"distinct", r.periodicity.distinct},
                           {"detail", r.periodicity.detail},
                           {"pass", r.periodicity.pass}};
  if (r.analyzed) {
    const auto& c = r.clearance.report;
    const Vec3& t = c.witness.translation;
    checks["clearance"] = {{"min_gap", c.min_gap},
                           {"threshold", r.clearance.threshold},
                           {"pair", Json::array({c.pair_i, c.pair_j})},
                           {"translation", Json::array({t.x, t.y, t.z})},
                           {"pass", r.clearance.pass}};
    Json hist = Json::array();
    std::size_t k = 0;
    for (const auto& [cls, count] : r.crossings.histogram) {
      hist.push_back({{"participants", cls.participants},
                      {"pair_contacts", cls.pair_contacts},
                      {"count", count},
                      {"type", k < r.crossings.names.size() ? r.crossings.names[k] : ""}});
      ++k;
    }
    checks["crossings"] = {{"histogram", std::move(hist)}, {"detail", r.crossings.detail},
                           {"pass", r.crossings.pass}};
    Json ch;
    ch["expected"] = std::string(to_string(r.chirality.expected));
    if (r.chirality.census) {
      const auto& s = *r.chirality.census;
      ch["observed"] = std::string(to_string(s.chirality));
      ch["right_handed"] = s.right_handed;
      ch["left_handed"] = s.left_handed;
      ch["components"] = s.components;
    } else {
      ch["observed"] = nullptr;
      ch["detail"] = r.chirality.detail;
    }
    ch["pass"] = r.chirality.pass;
    checks["chirality"] = std::move(ch);
    Json lv;
    lv["applicable"] = r.laves.applicable;
    lv["gating"] = false;
    if (r.laves.applicable) {
      lv["min_degree"] = r.laves.net.min_degree;
      lv["max_degree"] = r.laves.net.max_degree;
      lv["girth"] = r.laves.net.girth;
      lv["pass"] = r.laves.pass;
    }
    checks["laves"] = std::move(lv);
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string format_report(const ValidationReport& r) {
  std::ostringstream os;
  os << "weave        " << r.name << '\n';
  os << "counts       " << verdict(r.counts.pass) << "  " << r.counts.actual << " helices (expected "
     << r.counts.expected << ")\n";
  os << "periodicity  " << verdict(r.periodicity.pass);
  if (!r.periodicity.detail.empty()) os << "  " << r.periodicity.detail;
  os << '\n';
  if (r.analyzed) {
    const auto& c = r.clearance.report;
    os << "clearance    " << verdict(r.clearance.pass) << "  min_gap " << format_number(c.min_gap)
       << " (helices " << c.pair_i << ", " << c.pair_j << "; threshold "
       << format_number(r.clearance.threshold) << ")\n";
    os << "crossings    " << verdict(r.crossings.pass) << "  " << r.crossings.detail << '\n';
    os << "chirality    " << verdict(r.chirality.pass) << "  ";
    if (r.chirality.census) {
      const auto& s = *r.chirality.census;
      os << upper(to_string(s.chirality)) << " (" << s.right_handed << " right, " << s.left_handed
         << " left, " << s.components << " components; expected "
         << upper(to_string(r.chirality.expected)) << ")\n";
    } else {
      os << r.chirality.detail << '\n';
    }
    if (r.laves.applicable)
      os << "laves        " << verdict(r.laves.pass) << "  degree " << r.laves.net.min_degree << ".."
         << r.laves.net.max_degree << ", girth " << r.laves.net.girth << " (informational)\n";
  }
  os << "overall      " << verdict(r.pass) << '\n';
  return os.str();
}

}  // namespace tphw
