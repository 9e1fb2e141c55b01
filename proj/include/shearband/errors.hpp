#pragma once

#include <stdexcept>
#include <string>

namespace shearband {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter tuple violates one of the admissibility inequalities.
struct OutOfDomain : Error {
    enum class Constraint {
        m_range,         // 0 < m <= 1
        n_negative,      // n >= 0
        n_not_below_m,   // n < m
        lambda_nonpositive,
        lambda_upper_bound,
    };
    Constraint which;
    OutOfDomain(Constraint w, const std::string& msg) : Error(msg), which(w) {}
};

/// U0/Gamma0 outside the admissible open interval.
struct RatioOutOfRange : Error {
    double lower, upper;
    RatioOutOfRange(double lo, double hi, const std::string& msg)
        : Error(msg), lower(lo), upper(hi) {}
};

/// Operation requires n > 0.
struct NZero : Error {
    using Error::Error;
};

/// Closed-form eigenstructure disagrees with the numerical Jacobian.
struct EigenMismatch : Error {
    using Error::Error;
};

struct RBarOutOfRange : Error {
    using Error::Error;
};

/// Normal eigenvalue of the critical manifold dropped to ~0 on the domain.
struct DegenerateNormal : Error {
    using Error::Error;
};

struct CertificateFailed : Error {
    using Error::Error;
};

/// Adaptive integrator step size underflowed.
struct StepFailure : Error {
    using Error::Error;
};

/// The reduced orbit did not reach the target equilibrium within max_span.
struct NoCapture : Error {
    using Error::Error;
};

/// Asymptotic-coefficient fit rejected the orbit (wrong tangency branch).
struct FitFailure : Error {
    using Error::Error;
};

struct InconsistentLambda : Error {
    using Error::Error;
};

struct NonpositiveInput : Error {
    using Error::Error;
};

struct OutOfGrid : Error {
    using Error::Error;
};

/// PDE step produced nonpositive strain or strain rate below the floor.
struct StabilityViolation : Error {
    using Error::Error;
};

}  // namespace shearband
