#pragma once

#include <stdexcept>
#include <string>

namespace tildeiso {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed into a Word.
struct ParseError : Error {
    using Error::Error;
};

// An operation was asked to run on an alphabet it does not support.
struct AlphabetError : Error {
    using Error::Error;
};

// An index or length is outside the valid range.
struct BoundsError : Error {
    using Error::Error;
};

// Two words that must have equal length do not.
struct LengthMismatchError : Error {
    using Error::Error;
};

// An edit operation is not applicable to the given word.
struct InapplicableOpError : Error {
    using Error::Error;
};

// A search or enumeration would exceed its configured budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// A caller violated an operation's precondition.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace tildeiso
