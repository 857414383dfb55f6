#pragma once

#include <stdexcept>
#include <string>

namespace fracpos {

/// A parameter lies outside the mathematical domain of an operation
/// (alpha outside [1,d], t outside a window, negative eigenvalue, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operand shapes or bipartite dimensions do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed serialized input (bad JSON, missing fields, non-finite numbers).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed object failed its own post-verification. Signals a bug.
class VerificationError : public std::logic_error {
 public:
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fracpos
