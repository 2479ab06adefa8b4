#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spacegraph {

// Index or ordinal outside the valid domain of a structure.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument valid in range but not admissible for the operation
// (symbol outside the alphabet, directed input to an undirected algorithm, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spacegraph
