#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbraid {

enum class ErrorCode {
  ParseError,
  InvalidN,
  BadTriple,
  DimensionMismatch,
  InvalidMove,
  UnsupportedN,
  InvalidProgram,
  GenericityError,
  NotClosed,
  DegeneratePath,
  ConstructionFailure,
  NotRealisable,
  AdjacencyViolation,
  AmbiguousCentral,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::BadTriple: return "BadTriple";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::InvalidProgram: return "InvalidProgram";
    case ErrorCode::GenericityError: return "GenericityError";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::NotRealisable: return "NotRealisable";
    case ErrorCode::AdjacencyViolation: return "AdjacencyViolation";
    case ErrorCode::AmbiguousCentral: return "AmbiguousCentral";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` tells
/// callers (the CLI in particular) which class of failure occurred.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gbraid
