// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tphw {

enum class ErrorKind {
  InvalidDirection,
  UnsupportedAxis,
  DegenerateHelix,
  IncommensurateHelix,
  UnknownWeave,
  UnconstructedWeave,
  ParseError,
  InvariantViolation,
  SamePredicate,
  AmbiguousChirality,
  EmptyMesh,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// command line front end can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tphw
