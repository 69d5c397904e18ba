#pragma once

#include <stdexcept>
#include <string>

namespace peterson {

/// Violated precondition or invalid mathematical input (e.g. division by
/// zero, n < 2, mismatched variable sets).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed textual input; carries the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Two independent engines disagreed on a result both are supposed to
/// certify.  Always a bug, never a property of the input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace peterson
