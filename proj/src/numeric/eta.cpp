#include "internal.hpp"

#include "eulersums/closed_forms.hpp"
#include "eulersums/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace eulersums::numeric {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// sum_{k>=0} (-1)^k (N+k)^{-s} via Euler-Boole with f(x) = x^{-s}:
//   (1/2) sum_{m<p} E_m(0)/m! (-1)^m (s)_m N^{-s-m} + R_p,
//   |R_p| <= (1/2) sup|E_{p-1}|/(p-1)! |(s)_p| N^{1-Re s-p} / (Re s + p - 1).
// The expansion is asymptotic; p is chosen where the remainder bound is least.
struct AlternatingTail {
    Complex value;
    Complex derivative;  // d/ds
    double bound = 0.0;
    double derivative_bound = 0.0;
    double abs_terms = 0.0;
    std::size_t terms = 0;
};

AlternatingTail alternating_tail(Complex s, double n, double target) {
    const Complex scale = detail::pow_neg(n, s);
    const double scale_abs = std::abs(scale);
    const double sigma = s.real();
    const double log_n = std::log(n);

    Complex r{1.0, 0.0};  // (s)_m N^{-m}
    Complex dr{0.0, 0.0};
    Complex acc{};
    Complex dacc{};
    double abs_terms = 0.0;
    double inv_sum = 0.0;  // sum_{j<m} 1/|s+j|, for the derivative estimate

    AlternatingTail best;
    best.bound = std::numeric_limits<double>::infinity();
    for (unsigned m = 0; m < detail::kMaxTailTerms; ++m) {
        const double e = detail::euler_zero_scaled(m);
        if (e != 0.0) {
            const double c = (m % 2 == 0 ? 0.5 : -0.5) * e;
            acc += c * r;
            dacc += c * (dr - r * log_n);
            abs_terms += std::abs(c * r);
        }
        const Complex step = s + static_cast<double>(m);
        dr = (dr * step + r) / n;
        r = r * step / n;
        inv_sum += 1.0 / std::max(std::abs(step), 0.5);

        const unsigned p = m + 1;
        double bound = 0.0;
        if (r != Complex{0.0, 0.0}) {
            const double denom = sigma + p - 1.0;
            if (denom <= 0.0) continue;
            bound = 0.5 * detail::euler_sup_scaled(p - 1) * std::abs(r) * n / denom * scale_abs;
        }
        if (bound < best.bound) {
            best.value = acc * scale;
            best.derivative = dacc * scale;
            best.bound = bound;
            best.derivative_bound = bound * (log_n + inv_sum + 1.0);
            best.abs_terms = abs_terms * scale_abs;
            best.terms = p;
        }
        if (bound == 0.0 || (bound <= target && bound < 1e-3 * kEps * std::abs(best.value))) break;
    }
    return best;
}

struct EtaParts {
    ValueWithError value;
    ValueWithError derivative;
};

EtaParts eta_with_derivative(Complex s, const AccelConfig& cfg, double target, bool want_derivative) {
    const double s_abs = std::abs(s);
    std::vector<long> candidates;
    if (cfg.series_cutoff > 0) {
        candidates.push_back(std::max(2L, cfg.series_cutoff));
    } else {
        const long base = std::max(2L, static_cast<long>(std::ceil((s_abs + 45.0) / std::numbers::pi)) + 1);
        candidates = {base, 2 * base, 4 * base};
    }

    EtaParts best;
    best.value.error_bound = std::numeric_limits<double>::infinity();
    for (const long n : candidates) {
        // direct part: the exact k = 1 term plus k = 2 .. n-1, so the rounding
        // error scales with eta - 1 rather than with eta
        std::vector<double> weights(static_cast<std::size_t>(n - 2));
        for (long k = 2; k < n; ++k) weights[static_cast<std::size_t>(k - 2)] = (k % 2 == 1) ? 1.0 : -1.0;
        const auto direct = simd::shifted_power_sum(weights, 2.0, 0.0, s);

        const auto tail = alternating_tail(s, static_cast<double>(n), target * 0.5);
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}

        const double log_n = std::log(static_cast<double>(n));
        // each k^{-s} carries a relative error of about eps (1 + |s| ln k)
        double weighted = 0.0;
        for (long k = 2; k < n; ++k) {
            const double kd = static_cast<double>(k);
            weighted += std::pow(kd, -s.real()) * s_abs * std::log(kd);
        }
        const double rounding =
            4.0 * kEps * (direct.abs_sum + weighted + tail.abs_terms + std::abs(direct.sum));

        ValueWithError v;
        v.value = 1.0 + (direct.sum + sign * tail.value);
        v.error_bound = tail.bound + rounding + kEps * std::abs(v.value);
        v.bound_kind = BoundKind::Rigorous;
        v.terms_used = static_cast<std::size_t>(n - 1) + tail.terms;
        if (!(v.error_bound < best.value.error_bound)) continue;

        best.value = v;
        if (want_derivative) {
            for (long k = 2; k < n; ++k) {
                weights[static_cast<std::size_t>(k - 2)] =
                    ((k % 2 == 1) ? -1.0 : 1.0) * std::log(static_cast<double>(k));
            }
            const auto ddirect = simd::shifted_power_sum(weights, 2.0, 0.0, s);
            ValueWithError d;
            d.value = ddirect.sum + sign * tail.derivative;
            d.error_bound = tail.derivative_bound + rounding * (1.0 + log_n);
            d.bound_kind = BoundKind::Heuristic;
            d.terms_used = 2 * v.terms_used;
            best.derivative = d;
        }
        if (v.error_bound <= target) break;
    }
    return best;
}

}  // namespace

std::string_view reason_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonConvergence: return "non_convergence";
        case ErrorKind::PoleProximity: return "pole";
        case ErrorKind::DenominatorDegenerate: return "denominator_degenerate";
        case ErrorKind::UnsupportedRegion: return "unsupported_region";
        case ErrorKind::QuadratureFailure: return "quadrature_failure";
    }
    return "unknown";
}

int AccelConfig::resolved_q(Complex s) const {
    if (q > 0) return q;
    return static_cast<int>(std::ceil(std::abs(s.real()))) + 3;
}

Rational harmonic(unsigned n) {
    Rational h(0);
    for (unsigned k = 1; k <= n; ++k) h += Rational(1, static_cast<long>(k));
    return h;
}

Rational harmonic_alt(unsigned n) {
    Rational h(0);
    for (unsigned k = 1; k <= n; ++k) h += Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    return h;
}

namespace detail {

ValueWithError require_tolerance(ValueWithError v, const AccelConfig& cfg, const char* what) {
    const double scale = std::max(1.0, std::abs(v.value));
    if (!std::isfinite(v.value.real()) || !std::isfinite(v.value.imag()) || !std::isfinite(v.error_bound)) {
        throw EvalError(ErrorKind::NonConvergence, std::string(what) + ": non-finite result");
    }
    if (v.error_bound > cfg.tol * scale) {
        throw EvalError(ErrorKind::NonConvergence, std::string(what) + ": error bound " +
                                                       sci(v.error_bound) + " exceeds tolerance " +
                                                       sci(cfg.tol));
    }
    return v;
}

ValueWithError eta_core(Complex s, const AccelConfig& cfg, double target) {
    // At non-positive integers the direct terms k^{|s|} cancel badly; the value is rational.
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()) && s.real() > -1e4) {
        ValueWithError exact;
        exact.value = closed::eta_nonpositive(static_cast<unsigned>(-s.real())).to_double();
        exact.error_bound = kEps * std::abs(exact.value);
        exact.bound_kind = BoundKind::Rigorous;
        return exact;
    }
    return eta_with_derivative(s, cfg, target, false).value;
}

ValueWithError eta_prime_core(Complex s, const AccelConfig& cfg, double target) {
    return eta_with_derivative(s, cfg, target, true).derivative;
}

ValueWithError zeta_core(Complex s, const AccelConfig& cfg, double target) {
    const double pole_radius = cfg.tol;
    if (std::abs(s - 1.0) < pole_radius) {
        throw EvalError(ErrorKind::PoleProximity, "zeta: s is within tolerance of the pole at 1");
    }
    const Complex power = std::pow(Complex{2.0, 0.0}, 1.0 - s);
    const Complex denom = 1.0 - power;
    const double denom_abs = std::abs(denom);
    if (denom_abs < cfg.tol) {
        throw EvalError(ErrorKind::DenominatorDegenerate, "zeta: 1 - 2^{1-s} vanishes to within tolerance");
    }
    auto eta = eta_core(s, cfg, target * denom_abs);
    ValueWithError z;
    z.value = eta.value / denom;
    // 2^{1-s} carries a relative error of about eps |1-s| ln 2
    const double power_err = kEps * (1.0 + std::abs(1.0 - s) * std::numbers::ln2) * std::abs(power);
    z.error_bound = eta.error_bound / denom_abs + 4.0 * kEps * std::abs(z.value) +
                    4.0 * std::abs(z.value) * power_err / denom_abs;
    z.bound_kind = eta.bound_kind;
    z.terms_used = eta.terms_used;
    return z;
}

}  // namespace detail

ValueWithError eta_num(Complex s, const AccelConfig& cfg) {
    return detail::require_tolerance(detail::eta_core(s, cfg, cfg.tol * 0.1), cfg, "eta");
}

ValueWithError eta_prime_num(Complex s, const AccelConfig& cfg) {
    return detail::require_tolerance(detail::eta_prime_core(s, cfg, cfg.tol * 0.01), cfg, "eta'");
}

ValueWithError zeta_num(Complex s, const AccelConfig& cfg) {
    return detail::require_tolerance(detail::zeta_core(s, cfg, cfg.tol * 0.1), cfg, "zeta");
}

}  // namespace eulersums::numeric
