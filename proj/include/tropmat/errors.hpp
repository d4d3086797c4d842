#pragma once

#include <stdexcept>
#include <string>

namespace tropmat {

/// Rejected input: out-of-range elements, malformed descriptors, violated
/// preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A postcondition the library guarantees failed to hold; indicates a bug,
/// not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tropmat
