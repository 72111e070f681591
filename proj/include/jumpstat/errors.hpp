#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumpstat {

/// A precondition or internal invariant was broken. Signals a bug in the
/// caller (or in this library), never bad user data.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Work was refused because it would exceed a configured size cap.
class ResourceRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is the 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace jumpstat
