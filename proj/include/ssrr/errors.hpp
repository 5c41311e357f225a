#pragma once

#include <stdexcept>
#include <string>

namespace ssrr {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. rho <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The inverse of pi was asked for a value outside its range; the state would be vacuum.
class VacuumError : public Error {
public:
    using Error::Error;
};

/// Upstream normal pseudo-velocity is not supersonic, so no compressive shock exists.
class NoShockError : public Error {
public:
    using Error::Error;
};

/// Zero-strength shock: velocity jump vanishes and the normal is undefined.
class DegenerateShockError : public Error {
public:
    using Error::Error;
};

/// Upstream state is pseudo-subsonic at the requested point; the polar is empty.
class NoPolarError : public Error {
public:
    using Error::Error;
};

/// A geometric or sign precondition was violated (invalid configuration).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (field file, CSV) or unreadable/unwritable path.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace ssrr
