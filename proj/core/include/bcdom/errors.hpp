#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcdom {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A vertex id or index outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but violates a structural invariant
// (self-loop, intersection > 1, uncovered element, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold (e.g. a non-dominating set
// handed to a solution mapper).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Search budget, node limit or size guard exceeded. Never a wrong answer.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcdom
