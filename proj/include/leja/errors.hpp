// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace leja {

/// Thrown when caller-supplied data violates an operation's precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure fails in a way valid input should not trigger.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leja
