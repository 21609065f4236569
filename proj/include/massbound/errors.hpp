#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace massbound {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Raised by the Cholesky factorization when a pivot falls at or below the
// pivot floor.  Carries the zero-based pivot index that failed.
class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(std::size_t pivot_index)
        : Error("matrix is not positive definite (pivot " + std::to_string(pivot_index) + ")"),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

// Iterative kernel hit its sweep cap.  Carries the remaining off-diagonal
// residual for diagnostics.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class NonPositiveInnerProduct : public Error {
public:
    using Error::Error;
};

class DegenerateScaling : public Error {
public:
    using Error::Error;
};

class SingularShift : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class DuplicatePair : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace massbound
