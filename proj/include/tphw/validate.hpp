// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "tphw/crossing.hpp"
#include "tphw/io.hpp"

namespace tphw {

struct ValidationOptions {
  AnalysisConfig analysis;
  /// Clearance threshold as a fraction of the lattice period.
  double min_gap = 1e-3;
  int laves_shells = 3;
};

struct CountsCheck {
  int expected = 0;
  int actual = 0;
  bool pass = false;
};

struct PeriodicityCheck {
  bool commensurate = false;
  bool distinct = false;
  std::string detail;
  bool pass = false;
};

struct ClearanceCheck {
  ClearanceReport report;
  double threshold = 0.0;
  bool pass = false;
};

struct ChiralityCheck {
  ChiralityClass expected = ChiralityClass::One;
  std::optional<ChiralityCensus> census;  // empty when ambiguous
  std::string detail;
  bool pass = false;
};

/// Reported for weaves expected to form a double network. Not part of the
/// overall verdict.
struct LavesCheck {
  bool applicable = false;
  NetSummary net;
  bool pass = false;
};

struct ValidationReport {
  std::string name;
  CountsCheck counts;
  PeriodicityCheck periodicity;
  /// The geometric checks below run only when the periodicity check passes.
  bool analyzed = false;
  ClearanceCheck clearance;
  Classification crossings;
  ChiralityCheck chirality;
  LavesCheck laves;
  bool pass = false;
};

/// Throws UnconstructedWeave for weaves without geometry.
ValidationReport validate_weave(const WeaveSpec& w, const ValidationOptions& opt = {});

Json report_to_json(const ValidationReport& r, const ValidationOptions& opt = {});
/// Human-readable, one line per check.
std::string format_report(const ValidationReport& r);

}  // namespace tphw
