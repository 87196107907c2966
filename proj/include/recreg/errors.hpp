#pragma once

#include <stdexcept>
#include <string>

namespace recreg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the open domain of a function or distribution support.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Divided-difference request with |v-u| below the diagonal threshold.
class DiagonalTooClose : public Error {
public:
    using Error::Error;
};

/// Derivative or factorial order beyond what is representable exactly.
class OrderTooHigh : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil point landed on (or across) the diagonal.
class StencilCrossesDiagonal : public Error {
public:
    using Error::Error;
};

/// Invalid distribution or transform parameter.
class ParamError : public Error {
public:
    using Error::Error;
};

/// Transform T failed the strict-monotonicity validation grid.
class NonMonotoneTransform : public Error {
public:
    using Error::Error;
};

/// Conditioning tuple (n, k, r, u, v) violates its invariants.
class ContextError : public Error {
public:
    using Error::Error;
};

/// Hazard gap R(v) - R(u) too small to condition on.
class DegenerateHazard : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exceeded its recursion depth.
class QuadratureNonConvergence : public Error {
public:
    using Error::Error;
};

/// Record-stream scan hit its draw horizon before finding enough records.
class HorizonExhausted : public Error {
public:
    using Error::Error;
};

} // namespace recreg
