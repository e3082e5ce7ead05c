#pragma once

// Shared pieces of the numeric evaluators. Not installed.

#include "eulersums/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace eulersums::numeric::detail {

/// Highest derivative order used by the Euler-Boole tail of eta.
inline constexpr unsigned kMaxTailTerms = 160;
/// Largest truncation order q accepted by the continuations.
inline constexpr int kMaxQ = 60;

/// E_m(0) / m! for m <= kMaxTailTerms.
double euler_zero_scaled(unsigned m);
/// B_m / m!.
double bernoulli_scaled(unsigned m);
/// sup_[0,1] |E_k| / k!, from the Fourier majorant 4 lambda(k+1) / pi^{k+1}.
double euler_sup_scaled(unsigned k);
/// Coefficients (increasing degree) of E_k and B_k in double precision.
const std::vector<double>& euler_poly_coeffs(unsigned k);
const std::vector<double>& bernoulli_poly_coeffs(unsigned k);

/// Upper bound for zeta(k), k >= 2.
double zeta_upper(unsigned k);

/// Non-throwing cores: the public wrappers add the tolerance check.
ValueWithError eta_core(Complex s, const AccelConfig& cfg, double target);
ValueWithError eta_prime_core(Complex s, const AccelConfig& cfg, double target);
ValueWithError zeta_core(Complex s, const AccelConfig& cfg, double target);

enum class PhiKind { Alternating, Plain };
enum class KernelKind { EulerReflected, Bernoulli };

/// phi^{+-}(sigma, t) truncated so the tail majorant stays below eps.
ValueWithError phi_core(PhiKind kind, Complex sigma, double t, double eps);

/// int_0^inf K(t) phi(sigma, t) dt with K = Ebar_order(-t) or Bbar_order(t),
/// integrated one unit period at a time.
ValueWithError remainder_integral(KernelKind kernel, unsigned order, PhiKind phi, Complex sigma,
                                  const AccelConfig& cfg, double target);

/// Throws EvalError(NonConvergence) if the bound misses the configured tolerance.
ValueWithError require_tolerance(ValueWithError v, const AccelConfig& cfg, const char* what);

/// Short scientific rendering for error messages.
inline std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

/// x^{-s} for x > 0.
inline Complex pow_neg(double x, Complex s) {
    if (s.imag() == 0.0) return {std::pow(x, -s.real()), 0.0};
    return std::exp(-s * std::log(x));
}

}  // namespace eulersums::numeric::detail
