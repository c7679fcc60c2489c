#pragma once

#include <stdexcept>
#include <string>

namespace stratalab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported (label, rank) or an operation outside the build matrix.
struct UnsupportedError : Error {
    using Error::Error;
};

// An exhaustive scan would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// Precondition violation on user-supplied data.
struct InvalidInputError : Error {
    using Error::Error;
};

// A machine-checked lemma failed.  Must never fire on supported types;
// if it does, the input (or the paper) is wrong and we want a loud stop.
struct LemmaViolationError : Error {
    using Error::Error;
};

} // namespace stratalab
