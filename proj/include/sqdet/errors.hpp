#pragma once

#include <stdexcept>
#include <string>

namespace sqdet {

/// Malformed or out-of-contract user input (bad JSON, unknown element, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration guard or configurable cap was exceeded.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural hypothesis on the input (genericity, bijectivity) fails.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something that can only happen through a bug in this library, e.g. an
/// inexact division inside Bareiss elimination.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sqdet
