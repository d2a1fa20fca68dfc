#pragma once

#include <stdexcept>
#include <string>

namespace wordcx {

/// Base of every error the toolkit raises on bad input or misuse.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or contradictory input (word descriptions, morphisms, limits).
class InputError : public Error {
public:
    using Error::Error;
};

/// A factor, prefix or witness that reaches outside the available data.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace wordcx
