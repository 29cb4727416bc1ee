#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphconv {

enum class ErrorKind {
  DegenerateArc,
  DegenerateLune,
  NoEnclosingHemisphere,
  DegenerateHull,
  NotSupporting,
  BadRadius,
  Unreachable,
  InvalidSpec,
  EvenN,
  EmptyInterior,
  NotInHemisphere,
  PoleNotInterior,
  InconsistentVerdicts,
  ParseError,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateArc: return "DegenerateArc";
    case ErrorKind::DegenerateLune: return "DegenerateLune";
    case ErrorKind::NoEnclosingHemisphere: return "NoEnclosingHemisphere";
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::NotSupporting: return "NotSupporting";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::NotInHemisphere: return "NotInHemisphere";
    case ErrorKind::PoleNotInterior: return "PoleNotInterior";
    case ErrorKind::InconsistentVerdicts: return "InconsistentVerdicts";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sphconv
