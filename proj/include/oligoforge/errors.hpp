#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oligoforge {

// Malformed sequence text or file content. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Argument outside an operation's domain (length mismatch, shift out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration asked to go past its configured length cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proposed simplex generator failed structural verification.
class InvalidGenerator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oligoforge
