#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvecal {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Generator index outside 1..genus, or operands living on different surfaces.
class GenusError : public Error {
 public:
  using Error::Error;
};

// Exponent or intermediate value beyond the configured magnitude limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvecal
