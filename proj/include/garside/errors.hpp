#ifndef GARSIDE_ERRORS_HPP
#define GARSIDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Thrown when a computation exceeds a configured size or step bound
/// (enumeration degree too large, search budget exhausted).  Distinct from
/// a negative answer.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation needs structure the instance does not provide
/// (currently: anything requiring a fundamental element on an instance
/// without one).
struct UnsupportedInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a textual word or partition, with the byte offset of the
/// offending character.
struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"),
        offset(off) {}
};

}  // namespace garside

#endif
