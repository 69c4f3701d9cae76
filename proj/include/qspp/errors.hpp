#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qspp {

/// A documented precondition of an algorithm does not hold for the input
/// (wrong graph family, cyclic graph where a DAG is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration-based routine would exceed its path budget.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No s-t path exists.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the 0-based index of the offending
/// whitespace-separated token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (token " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qspp
