#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lwik {

using Complex = std::complex<double>;

inline constexpr double kE = std::numbers::e;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInvE = 1.0 / std::numbers::e;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the region where the requested function or formula is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iterative solver did not meet its residual target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An integrand or intermediate quantity evaluated to inf/NaN.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// Malformed QuadratureSpec or similar configuration.
class SpecError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a simple pole (e.g. the Sokal functions at z = 0).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Padé linear system too ill-conditioned to solve.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// Finite-difference tower lost all significant digits.
class StepTooSmallError : public Error {
public:
    using Error::Error;
};

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace lwik
