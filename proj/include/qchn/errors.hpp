// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace qchn {

// Malformed input: bad dimensions, out-of-range factor positions, invalid flags.
struct invalid_argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact-arithmetic failures: division by zero, evaluation at a pole,
// too few admissible samples.
struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar-expression syntax errors, with a byte offset into the input.
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace qchn
