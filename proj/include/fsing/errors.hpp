#ifndef FSING_ERRORS_HPP
#define FSING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsing {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: malformed polynomial text, non-prime modulus,
// mismatched rings, violated preconditions.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

struct ParseError : InvalidArgument {
  ParseError(const std::string& msg, std::size_t pos)
      : InvalidArgument(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// A computation would exceed a configured size bound (term counts,
// ambient dimensions, exponent range). Raised instead of exhausting memory.
struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

}  // namespace fsing

#endif
