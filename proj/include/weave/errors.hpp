#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weave {

// Invalid parameters: p < 2, n < 1, letter out of range, ...
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. position() is the 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// The state sum would exceed the configured budget.
class TooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A value is not of the form +-i^(mu-1) (i sqrt3)^n.
class NotLMForm : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A value is not a unit times a rational integer.
class NotUnitTimesInteger : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// JSON document does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An odd A-exponent survived writhe normalization.
class InternalParityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace weave
