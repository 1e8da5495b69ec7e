#pragma once

#include <stdexcept>
#include <string>

namespace projdist {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected input (bad matrices, bad ranges, bad instance specs).
// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotHermitian : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotProjection : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotInvolution : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotNormalized : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadSpec : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// An eigenvalue of the generic-part operator landed too close to 0 or 1.
// Signals a tolerance misconfiguration rather than a property of the input.
class DegenerateSpectrum : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Iterative solver ran out of its sweep budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// Functional-calculus table does not cover every spectral cluster.
class MissingClusterValue : public Error {
public:
    using Error::Error;
};

// chi/omega lists do not match the number of spectral clusters.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Minimizer construction requested in Case 1.
class CaseOneError : public Error {
public:
    using Error::Error;
};

// ||eue|| too close to 1 for the inverse-square-root route.
class NormTooLarge : public Error {
public:
    using Error::Error;
};

// Exhaustive chi enumeration would exceed the configured cap.
class TooManyClusters : public Error {
public:
    using Error::Error;
};

// Matrix file could not be parsed. The CLI maps this to exit code 3.
class ParseError : public Error {
public:
    using Error::Error;
};

// A cross-check that must hold by construction failed; indicates a bug,
// not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace projdist
