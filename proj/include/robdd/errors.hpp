#pragma once

#include <stdexcept>
#include <string>

namespace robdd {

/// A caller broke a documented precondition (programming error).
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bad user-supplied input: negative widths, unsupported k, malformed flags.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a resource budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace robdd
