#pragma once

#include <stdexcept>
#include <string>

namespace sphere_chroma {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a document cannot be parsed or fails schema validation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sphere_chroma
