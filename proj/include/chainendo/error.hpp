#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chainendo {

enum class ErrorKind {
  NotMonotone,
  OutOfRange,
  BadLength,
  BadMultiplicitySum,
  ImageNotInVertexSet,
  ChainMismatch,
  VertexSetMismatch,
  InvalidVertexSet,
  NotInSimplex,
  InvalidProjection,
  IncompatibleSpecs,
  InvalidSelector,
  BoundsTooLarge,
  UnknownClaim,
  SyntaxError,
  BadSum,
  NonIncreasingVertices,
  Overflow,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadMultiplicitySum: return "BadMultiplicitySum";
    case ErrorKind::ImageNotInVertexSet: return "ImageNotInVertexSet";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorKind::InvalidVertexSet: return "InvalidVertexSet";
    case ErrorKind::NotInSimplex: return "NotInSimplex";
    case ErrorKind::InvalidProjection: return "InvalidProjection";
    case ErrorKind::IncompatibleSpecs: return "IncompatibleSpecs";
    case ErrorKind::InvalidSelector: return "InvalidSelector";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadSum: return "BadSum";
    case ErrorKind::NonIncreasingVertices: return "NonIncreasingVertices";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library. `value()` carries the offending
/// integer where one exists (a table entry, a text position, a case count).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<long long> value = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long long> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<long long> value_;
};

}  // namespace chainendo
