#pragma once

#include <stdexcept>
#include <string>

namespace floerlink {

enum class Errc {
  DimensionMismatch,
  NotDivisible,
  NotSymmetric,
  SymmetryViolation,
  NotLSpaceStaircase,
  EmptySublink,
  WrongArity,
  NotPerfectSquare,
  MissingSublink,
  MissingSublinkData,
  ValidationFailed,
  NotLarge,
  IndexOutOfRange,
  NotAlgebraicallySplit,
  ParseError,
  UnknownLink,
  HypothesisMissing,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::NotLSpaceStaircase: return "NotLSpaceStaircase";
    case Errc::EmptySublink: return "EmptySublink";
    case Errc::WrongArity: return "WrongArity";
    case Errc::NotPerfectSquare: return "NotPerfectSquare";
    case Errc::MissingSublink: return "MissingSublink";
    case Errc::MissingSublinkData: return "MissingSublinkData";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::NotLarge: return "NotLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAlgebraicallySplit: return "NotAlgebraicallySplit";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownLink: return "UnknownLink";
    case Errc::HypothesisMissing: return "HypothesisMissing";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace floerlink
