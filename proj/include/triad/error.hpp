#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triad {

enum class ErrorKind {
  ParseError,
  LengthMismatch,
  EnumerationCapExceeded,
  DegenerateLattice,
  NotPositiveDefinite,
  NotEvenLattice,
  NotDoublyEven,
  IllFormedQuadraticForm,
  NonUnitLeadingCoefficient,
  ExponentBeyondTruncation,
  UnboundedSeries,
  NoLatticeRealization,
  InclusionViolation,
  InvalidArgument,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotEvenLattice: return "NotEvenLattice";
    case ErrorKind::NotDoublyEven: return "NotDoublyEven";
    case ErrorKind::IllFormedQuadraticForm: return "IllFormedQuadraticForm";
    case ErrorKind::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorKind::ExponentBeyondTruncation: return "ExponentBeyondTruncation";
    case ErrorKind::UnboundedSeries: return "UnboundedSeries";
    case ErrorKind::NoLatticeRealization: return "NoLatticeRealization";
    case ErrorKind::InclusionViolation: return "InclusionViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

/// Domain error carrying the name of the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace triad
