#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed identity text. `offset` is the byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation symbol or context that the enclosing signature does not declare.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Vector, matrix or algebra dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A verified precondition of a construction failed (e.g. R is not Rota-Baxter).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dendri
