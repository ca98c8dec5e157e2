#pragma once

#include <stdexcept>
#include <string>

namespace gspline {

enum class ErrorKind {
  UnsupportedRing,
  DivisionByZero,
  ParseError,
  UnknownVariable,
  UnknownVertex,
  MixedRings,
  NoSuchEdge,
  NoSuchVertex,
  DisconnectedInput,
  TooLarge,
  UnrelatedGraphs,
  InvalidFactor,
  Schema,
};

const char* to_string(ErrorKind kind);

/// All failures surface as this exception; `kind()` tells callers (and the
/// CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Computational failures (exit 1) as opposed to bad input (exit 2).
  bool is_computational() const noexcept {
    return kind_ == ErrorKind::UnsupportedRing || kind_ == ErrorKind::TooLarge ||
           kind_ == ErrorKind::DisconnectedInput || kind_ == ErrorKind::DivisionByZero;
  }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the byte offset into the input string.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gspline
