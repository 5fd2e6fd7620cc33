#pragma once

#include <stdexcept>
#include <string>

namespace hyperlearn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands over mismatched variable counts.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Parameter outside an operation's domain.
struct InvalidArgument : Error {
    using Error::Error;
};

// A resource guard refused the request; message names the bound.
struct GuardExceeded : Error {
    using Error::Error;
};

// Second batch sent to a strict teacher.
struct NonAdaptivityViolation : Error {
    using Error::Error;
};

// Hash family turned out not to separate the points the decoder needed.
struct PhfFailure : Error {
    using Error::Error;
};

// Malformed text input.
struct ParseError : Error {
    using Error::Error;
};

// A design could not be produced or did not verify.
struct DesignFailure : Error {
    using Error::Error;
};

} // namespace hyperlearn
