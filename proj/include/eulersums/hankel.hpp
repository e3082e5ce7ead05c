#pragma once

// Real-axis evaluation of
//
//   G(s) = (1/Gamma(s)) int_0^inf x^{s-1} e^{-x}/(1+e^{-x}) log((1-e^{-x})/x) dx
//
// and its comparison with v(s) - zeta(s+1) - psi(s) eta(s) - eta'(s).

#include "eulersums/numeric.hpp"

namespace eulersums::hankel {

using numeric::AccelConfig;
using numeric::Complex;
using numeric::ValueWithError;

/// Below this x, log((1-e^{-x})/x) is summed from its Bernoulli series.
inline constexpr double kSeriesThreshold = 1.0;

/// log((1-e^{-x})/x) for x > 0.
double log_factor(double x);
/// The same by direct evaluation, without the series branch. Exposed for seam tests.
double log_factor_direct(double x);

/// x^{s-1} e^{-x}/(1+e^{-x}) log((1-e^{-x})/x), x > 0.
Complex g_integrand(Complex s, double x);

/// G(s) for real s > -1, s not an integer >= 0. Uses cfg.tol and cfg.quad_nodes.
/// Throws EvalError: UnsupportedRegion for s <= -1 or s = 0, PoleProximity at
/// positive integers, QuadratureFailure if the error estimate misses tol.
ValueWithError g_num(double s, const AccelConfig& cfg = {.tol = 1e-12});

struct ResidualReport {
    double s = 0.0;
    ValueWithError lhs;  // G by quadrature
    ValueWithError rhs;  // v(s) - zeta(s+1) - psi(s) eta(s) - eta'(s)
    double residual = 0.0;
};

/// Both sides at real s in (0, inf) minus the positive integers.
ResidualReport theorem4_residual(double s, const AccelConfig& cfg = {.tol = 1e-12});

/// |log(1-e^{-x})/(1+e^{-x}) - sum_{n=1}^{terms} (-1)^n H_n^- e^{-nx}|, 0 < x <= 1.
double log_series_check(double x, unsigned terms);

}  // namespace eulersums::hankel
