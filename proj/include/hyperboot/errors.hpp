#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperboot {

/// Malformed edge: wrong arity, repeated vertex or vertex out of range.
class InvalidEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Percolation parameters that cannot describe a process (e.g. k <= r).
class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Construction parameter outside the supported range.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that violates an operation's precondition (e.g. e0 not in G0).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested storage layout does not fit the memory budget, or a
/// combinatorial count overflows the key width.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text-format parse failure; line() is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperboot
