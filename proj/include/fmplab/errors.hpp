#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmplab {

// Malformed textual input (graph6, edge lists). Carries the byte offset of
// the first offending character so callers can point at it.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A computation was refused because it would exceed a documented size cap.
// Distinct from wrong input: the request is well-formed but out of range
// for exact computation, and we never silently approximate instead.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fmplab
