#include "shearband/params.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace shearband {

ValidatedParams validate_params(const ModelParams& raw) {
    using C = OutOfDomain::Constraint;
    if (!(raw.m > 0.0) || !(raw.m <= 1.0))
        throw OutOfDomain(C::m_range, "m must satisfy 0 < m <= 1, got " + std::to_string(raw.m));
    if (raw.n < 0.0)
        throw OutOfDomain(C::n_negative, "n must be nonnegative, got " + std::to_string(raw.n));
    if (!(raw.n < raw.m))
        throw OutOfDomain(C::n_not_below_m,
                          "n < m required (unstable regime), got n = " + std::to_string(raw.n) +
                              ", m = " + std::to_string(raw.m));
    if (!(raw.lambda > 0.0))
        throw OutOfDomain(C::lambda_nonpositive,
                          "lambda must be positive, got " + std::to_string(raw.lambda));
    const double bound = lambda_upper_bound(raw.m, raw.n);
    if (!(raw.lambda < bound))
        throw OutOfDomain(C::lambda_upper_bound,
                          "lambda must be below (2-n)(m-n)/(1-m+n) = " + std::to_string(bound) +
                              ", got " + std::to_string(raw.lambda));
    return ValidatedParams(raw);
}

DerivedConstants derive_constants(const ValidatedParams& p) {
    const double lam = p.lambda(), m = p.m(), n = p.n();
    const double s = 1.0 + m - n;
    DerivedConstants k{};
    k.a = (2.0 - n) / s + 2.0 * lam / s;
    k.b = (1.0 - m) / s + (1.0 - m + n) * lam / s;
    k.alpha = -2.0 / s;
    k.beta = -(1.0 - m + n) / s;
    k.c = (2.0 - n) / s - (1.0 - m + n) * lam / (s * (m - n));
    k.d = (1.0 - m) / s + 2.0 * lam / s;
    k.e = (1.0 - m) / s - 2.0 * (m - n) * lam / s;
    k.f = (1.0 - m) / s - (1.0 - m + n) * lam / (s * (m - n));
    k.g = (2.0 - n) / s + (1.0 - m + n) * lam / s;
    k.h = (2.0 - n) / s - 2.0 * (m - n) * lam / s;
    if (n > 0.0) {
        k.A = (m - n) / n * k.a / lam;
        k.B = (m - n) / n * k.c / lam;
        k.C = (m - n) / (1.0 - m + n) * k.B;
    } else {
        const double inf = std::numeric_limits<double>::infinity();
        k.A = inf;
        k.B = inf;
        k.C = inf;
    }
    return k;
}

double lambda_from_initial_data(double Gamma0, double U0, double m, double n) {
    if (!(Gamma0 > 0.0) || !(U0 > 0.0))
        throw NonpositiveInput("Gamma0 and U0 must be positive");
    const double s = 1.0 + m - n;
    const double lo = (2.0 - n) / s;
    const double hi = (1.0 - m + n > 0.0) ? (2.0 - n) / (1.0 - m + n)
                                          : std::numeric_limits<double>::infinity();
    const double ratio = U0 / Gamma0;
    if (!(ratio > lo) || !(ratio < hi))
        throw RatioOutOfRange(lo, hi,
                              "U0/Gamma0 = " + std::to_string(ratio) +
                                  " outside admissible open interval (" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + ")");
    return 0.5 * s * (ratio - lo);
}

}  // namespace shearband
