#pragma once

#include <cmath>
#include <limits>

#include "shearband/errors.hpp"

namespace shearband {

/// Raw model tuple: focusing rate lambda, strain-softening exponent m,
/// rate sensitivity n.
struct ModelParams {
    double lambda = 1.0;
    double m = 0.8;
    double n = 0.05;
};

// Degeneracy detection tolerances (sqrt of double precision keeps the
// eigenvector branch choice stable under perturbation of the inputs).
inline constexpr double kHalfGapTol = 1e-9;   // |m - n - 1/2|
inline constexpr double kEZeroTol = 1e-12;    // |e|

/// Upper admissible bound for lambda, (2-n)(m-n)/(1-m+n).
/// +infinity on the m=1, n=0 edge where the denominator vanishes.
inline double lambda_upper_bound(double m, double n) {
    const double den = 1.0 - m + n;
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return (2.0 - n) * (m - n) / den;
}

/// A parameter tuple certified against the admissibility inequalities.
/// n = 0 is accepted with critical_only set: only the critical-manifold
/// pathway may consume it, orbit-level operations must reject it.
class ValidatedParams {
  public:
    double lambda() const { return p_.lambda; }
    double m() const { return p_.m; }
    double n() const { return p_.n; }
    bool critical_only() const { return p_.n == 0.0; }

    /// Distance from lambda to its upper bound (conditioning margin).
    double lambda_margin() const { return lambda_upper_bound(p_.m, p_.n) - p_.lambda; }

    ModelParams raw() const { return p_; }

  private:
    friend ValidatedParams validate_params(const ModelParams&);
    explicit ValidatedParams(const ModelParams& p) : p_{p} {}
    ModelParams p_;
};

/// Closed-form constants derived from a validated tuple.
/// A, B, C are +infinity at n = 0 (they diverge as n -> 0).
struct DerivedConstants {
    double a, b;          // similarity exponents
    double alpha, beta;   // profile scaling exponents
    double c, d, e, f, g, h;
    double A, B, C;       // fast eigenvalue magnitudes, O(1/n)

    bool e_is_zero() const { return std::fabs(e) <= kEZeroTol; }
};

inline bool half_gap_degenerate(double m, double n) {
    return std::fabs(m - n - 0.5) <= kHalfGapTol;
}

/// Certify a tuple against the admissibility inequalities; throws OutOfDomain
/// naming the violated constraint.
ValidatedParams validate_params(const ModelParams& raw);

/// Evaluate the thirteen closed-form constants.
DerivedConstants derive_constants(const ValidatedParams& p);

/// Focusing rate from initial nonuniformity sizes:
///   lambda = (1+m-n)/2 * (U0/Gamma0 - (2-n)/(1+m-n)).
/// Throws RatioOutOfRange unless U0/Gamma0 lies in the open interval
/// ((2-n)/(1+m-n), (2-n)/(1-m+n)).
double lambda_from_initial_data(double Gamma0, double U0, double m, double n);

}  // namespace shearband
