#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A label or index that does not belong to the object it was used with.
struct InvalidIndexError : Error {
    using Error::Error;
};

// Pivot requested on a singular principal submatrix, a non-edge, or a
// looped endpoint.
struct PivotError : Error {
    using Error::Error;
};

// Operation defined only for a restricted input class (e.g. the one-variable
// recursion on graphs without loops).
struct UnsupportedInputError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured size cap. Orbit closures
// signal their cap through a partial-result flag instead, so callers keep
// the value computed so far.
struct SizeCapError : Error {
    using Error::Error;
};

// Set-system family is empty where a feasible set is required.
struct EmptyFamilyError : Error {
    using Error::Error;
};

// Distance undefined because some loop complement emptied the family.
struct UndefinedDistanceError : Error {
    using Error::Error;
};

// Feasible sets are not the bases of a matroid.
struct NotAMatroidError : Error {
    using Error::Error;
};

// A constructed object failed its structural validation.
struct ValidationError : Error {
    using Error::Error;
};

// Text input could not be parsed; the message names the line number.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace interlace
