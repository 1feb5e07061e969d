#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critlab {

/// Malformed textual input. `offset` is the byte offset inside the record,
/// `line` the 1-based line in the enclosing file (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// A precondition on a graph, coloring or vertex set does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters outside the range the constant family is defined for.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a coloring of G-xy extends to a Delta-coloring of G, i.e. the
/// graph handed in as Delta-critical is not.
class CriticalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace critlab
