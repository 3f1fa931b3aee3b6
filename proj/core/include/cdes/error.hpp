#pragma once

#include <stdexcept>
#include <string>

namespace cdes {

/// Input violates an operation's precondition (malformed set, n < max(S), ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration or materialization would exceed its configured cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace cdes
