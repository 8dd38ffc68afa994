// SPDX-License-Identifier: Apache-2.0
#include "tphw/error.hpp"

namespace tphw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDirection: return "InvalidDirection";
    case ErrorKind::UnsupportedAxis: return "UnsupportedAxis";
    case ErrorKind::DegenerateHelix: return "DegenerateHelix";
    case ErrorKind::IncommensurateHelix: return "IncommensurateHelix";
    case ErrorKind::UnknownWeave: return "UnknownWeave";
    case ErrorKind::UnconstructedWeave: return "UnconstructedWeave";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SamePredicate: return "SamePredicate";
    case ErrorKind::AmbiguousChirality: return "AmbiguousChirality";
    case ErrorKind::EmptyMesh: return "EmptyMesh";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace tphw
