#pragma once

#include <stdexcept>
#include <string>

namespace sinai {

// Caller supplied something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A size guard refused the work instead of truncating it.
class ResourceGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that must hold for valid input failed (non-exact division,
// missing Raney point, ...). Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sinai
