// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace tphw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kValidationFail = 3,
  kIoOrParse = 4,
  kNumerical = 5,
};

/// Runs one tphw command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tphw::cli
