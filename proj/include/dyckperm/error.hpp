#pragma once

#include <stdexcept>
#include <string>

namespace dyckperm {

// Base of every error raised on bad user input. The CLI maps these to exit
// code 1; anything else escaping the library is a bug.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A library invariant that the mathematics guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dyckperm
