#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k2t {

/// A caller violated an operation's documented precondition (non-edge
/// contraction, u == v, disconnected input where connectivity is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer parameters outside the family's range (t < 2, n <= t, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is well-formed but exceeds what the algorithm is built for
/// (pattern too large, oracle graph too large, generator order too large).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iterative eigensolver failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        message_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

}  // namespace k2t
