#pragma once

// Floating-point evaluation of eta, zeta, Gamma, digamma, eta' and the
// analytic continuations of u, v, w.
//
// The continuations use the Euler-Boole representation (u, v) and the
// Euler-Maclaurin representation (w):
//
//   2u(s) = eta(s+1) - sum_{m<q} (s)_{2m+1}/(2m+1)! E_{2m+1}(0) eta(s+2m+2)
//         + (s)_{2q}/(2q-1)! int_0^inf Ebar_{2q-1}(-t) phi^-(s+2q, t) dt
//
// with zeta/phi^+ in place of eta/phi^- for v, and
//
//   w(s) = eta(s)/(s-1) + eta(s+1)/2 + sum_{m=1}^{q} (s)_{2m-1}/(2m)! B_{2m} eta(s+2m)
//        - (s)_{2q+1}/(2q+1)! int_0^inf Bbar_{2q+1}(t) phi^-(s+2q+1, t) dt.
//
// eta itself is evaluated for every complex s by summing N-1 terms directly
// and replacing the alternating tail with its Euler-Boole expansion, so it
// needs no functional equation.
//
// The direct_* functions are independent oracles: plain partial sums of the
// defining series, grouped in pairs and Richardson-extrapolated in the number
// of pairs.

#include "eulersums/rational.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulersums::numeric {

using Complex = std::complex<double>;

enum class BoundKind { Rigorous, Heuristic };

struct ValueWithError {
    Complex value;
    double error_bound = 0.0;
    BoundKind bound_kind = BoundKind::Heuristic;
    /// Series terms plus quadrature nodes spent; used by the benchmark.
    std::size_t terms_used = 0;
};

struct AccelConfig {
    int q = 0;                    ///< truncation order; 0 selects ceil(|Re s|) + 3
    long series_cutoff = 0;       ///< direct terms before the eta tail expansion; 0 = automatic
    int quad_nodes = 20;          ///< Gauss-Legendre nodes per unit period
    int period_cap = 2000;        ///< periods of the remainder integral before giving up
    double tol = 1e-10;           ///< target error, absolute below |value| = 1 and relative above

    int resolved_q(Complex s) const;
};

/// Settings for the direct-sum oracles.
struct OracleConfig {
    std::size_t first_pairs = 32;  ///< pairs in the coarsest partial sum
    int levels = 15;               ///< doublings; the finest sum has first_pairs * 2^levels pairs
    double tol = 1e-8;             ///< the rounding estimate grows near the convergence abscissa
};

enum class ErrorKind { NonConvergence, PoleProximity, DenominatorDegenerate, UnsupportedRegion, QuadratureFailure };

/// Stable machine-readable code: "non_convergence", "pole", "denominator_degenerate",
/// "unsupported_region", "quadrature_failure".
std::string_view reason_code(ErrorKind kind);

class EvalError : public std::runtime_error {
public:
    EvalError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// H_n = 1 + 1/2 + ... + 1/n and H_n^- = 1 - 1/2 + ... + (-1)^{n-1}/n, exactly.
Rational harmonic(unsigned n);
Rational harmonic_alt(unsigned n);

ValueWithError eta_num(Complex s, const AccelConfig& cfg = {});
ValueWithError eta_prime_num(Complex s, const AccelConfig& cfg = {});
/// zeta(s) = eta(s) / (1 - 2^{1-s}).
ValueWithError zeta_num(Complex s, const AccelConfig& cfg = {});

ValueWithError gamma_num(Complex s);
ValueWithError digamma_num(Complex s);

/// phi^-(s,t) = sum (-1)^{n-1} / (n (n+t)^s), phi^+(s,t) = sum 1 / (n (n+t)^s).
/// Truncated with an integral majorant for the tail, so Re s > 0 and t >= 0.
ValueWithError phi_minus(Complex s, double t, const AccelConfig& cfg = {});
ValueWithError phi_plus(Complex s, double t, const AccelConfig& cfg = {});

/// Antiperiodic extension of E_q from [0,1] (Ebar(t+1) = -Ebar(t)).
double euler_bar(unsigned q, double t);
/// Period-1 extension of the Bernoulli polynomial B_k from [0,1).
double bernoulli_bar(unsigned k, double t);
/// max over [0,1] of |E_k| and |B_k|.
double euler_sup_norm(unsigned k);
double bernoulli_sup_norm(unsigned k);

ValueWithError u_num(Complex s, const AccelConfig& cfg = {});
ValueWithError v_num(Complex s, const AccelConfig& cfg = {});
ValueWithError w_num(Complex s, const AccelConfig& cfg = {});

ValueWithError direct_u(Complex s, const OracleConfig& cfg = {});
ValueWithError direct_v(Complex s, const OracleConfig& cfg = {});
ValueWithError direct_w(Complex s, const OracleConfig& cfg = {});
/// sum_{n>=1} (-1)^n H_n^- / (n+1)^s, by the same method.
ValueWithError direct_shifted_alt(Complex s, const OracleConfig& cfg = {});

}  // namespace eulersums::numeric
