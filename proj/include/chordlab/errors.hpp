#pragma once

#include <stdexcept>
#include <string>

namespace chordlab {

// A value violates the contract of the operation it was passed to.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text or JSON input that does not describe a valid value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a configured resource cap (enumeration size, row bound).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chordlab
