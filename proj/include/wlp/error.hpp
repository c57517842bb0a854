#pragma once

#include <stdexcept>
#include <string>

namespace wlp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (weight window, |z| != 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numeric parameter violating a precondition (p < 1, |r| >= 1, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Index range overflow or a window exceeding a size cap.
class SizeError : public Error {
public:
    using Error::Error;
};

/// An adaptive procedure failed to reach its tolerance.
class AccuracyError : public Error {
public:
    using Error::Error;
};

/// A weight value left the representable range.
class RangeError : public Error {
public:
    using Error::Error;
};

class InvalidCharacterError : public Error {
public:
    using Error::Error;
};

/// Blaschke parameter outside the admissible set of a weighted experiment.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class InvertibilityError : public Error {
public:
    using Error::Error;
};

} // namespace wlp
