#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction (endpoint out of range, self-loop).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / edge-list input. `offset` is the byte position of the
/// offending character (or the input length for truncation errors).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its stated hypotheses
/// (disconnected input, parameter below minimum, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured vertex cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t projected, std::size_t cap)
      : Error(what), projected_(projected), cap_(cap) {}
  std::size_t projected() const noexcept { return projected_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t projected_;
  std::size_t cap_;
};

/// A closed-form expression is undefined for the given arguments
/// (negative radicand).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace itg
