#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

enum class ErrorKind {
  MalformedHeader,
  TruncatedPayload,
  TrailingBits,
  InvalidBit,
  ResourceGuard,
  Unresolved,
  RangeError,
  InvalidArgument,
  SyntaxError,
  NegativeExponent,
  UndeclaredIdentifier,
};

std::string_view error_kind_name(ErrorKind kind);

/// Base exception for every recoverable failure in the library. The kind is
/// stable and machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; carries the byte offset of the offending
/// token in the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t position)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace omega
