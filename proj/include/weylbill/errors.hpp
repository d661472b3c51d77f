#pragma once

#include <stdexcept>
#include <string>

namespace weylbill {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to reach its tolerance. Carries the best
/// available value and its error estimate so the caller can decide.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double best, double error_estimate)
        : Error(what), best_(best), error_estimate_(error_estimate) {}
    double best() const { return best_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_;
    double error_estimate_;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Geometry construction and parsing.
class GeometryError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public GeometryError {
public:
    SyntaxError(const std::string& what, int line, int column)
        : GeometryError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class OpenChainError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class OrientationError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class ZeroLengthSegment : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class CornerPoint : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Ray tracing and linearized maps.
class GrazingIncidence : public Error {
public:
    using Error::Error;
};

class RayEscape : public Error {
public:
    using Error::Error;
};

class CornerHit : public Error {
public:
    using Error::Error;
};

// Orbit families.
class CausticError : public Error {
public:
    using Error::Error;
};

class ObtuseNoClosedOrbit : public Error {
public:
    using Error::Error;
};

/// Evaluation at a coordinate singularity (e.g. the apex of a flattened corner).
class Singular : public DomainError {
public:
    using DomainError::DomainError;
};

// Spectra.
class EmptySpectrum : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

} // namespace weylbill
