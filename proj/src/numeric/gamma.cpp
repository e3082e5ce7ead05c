#include "internal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace eulersums::numeric {

namespace {

constexpr double kShiftTo = 12.0;
constexpr int kStirlingTerms = 12;  // uses B_2 .. B_24
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_nonpositive_integer(Complex s) {
    if (s.real() > 0.5) return false;
    const double r = std::round(s.real());
    return std::abs(s - Complex{r, 0.0}) < 1e-14 * std::max(1.0, std::abs(r));
}

// log Gamma(z) for Re z >= kShiftTo by the Stirling series.
Complex log_gamma_stirling(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex corr{};
    Complex p = inv;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        // B_{2k} / (2k (2k-1)) z^{1-2k}
        const double b = detail::bernoulli_scaled(2 * k) * std::tgamma(2.0 * k + 1.0);
        corr += b / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + corr;
}

// psi(z) for Re z >= kShiftTo: log z - 1/(2z) - sum B_{2k} / (2k z^{2k}).
Complex digamma_stirling(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex corr{};
    Complex p = inv2;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        const double b = detail::bernoulli_scaled(2 * k) * std::tgamma(2.0 * k + 1.0);
        corr += b / (2.0 * k) * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 * inv - corr;
}

Complex log_gamma_right(Complex s) {
    // shift up: log Gamma(s) = log Gamma(s + n) - sum_{j<n} log(s + j)
    Complex shift{};
    Complex z = s;
    while (z.real() < kShiftTo) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

Complex digamma_right(Complex s) {
    Complex shift{};
    Complex z = s;
    while (z.real() < kShiftTo) {
        shift += 1.0 / z;
        z += 1.0;
    }
    return digamma_stirling(z) - shift;
}

}  // namespace

ValueWithError gamma_num(Complex s) {
    if (near_nonpositive_integer(s)) throw EvalError(ErrorKind::PoleProximity, "gamma: pole at a non-positive integer");
    Complex value;
    if (s.real() < 0.5) {
        // Gamma(s) Gamma(1-s) = pi / sin(pi s)
        value = std::numbers::pi / (std::sin(std::numbers::pi * s) * std::exp(log_gamma_right(1.0 - s)));
    } else {
        value = std::exp(log_gamma_right(s));
    }
    ValueWithError out;
    out.value = value;
    out.error_bound = 64.0 * kEps * std::abs(value) * (1.0 + std::abs(s));
    out.bound_kind = BoundKind::Heuristic;
    out.terms_used = kStirlingTerms;
    return out;
}

ValueWithError digamma_num(Complex s) {
    if (near_nonpositive_integer(s)) {
        throw EvalError(ErrorKind::PoleProximity, "digamma: pole at a non-positive integer");
    }
    Complex value;
    if (s.real() < 0.5) {
        // psi(s) = psi(1-s) - pi cot(pi s)
        const Complex ps = std::numbers::pi * s;
        value = digamma_right(1.0 - s) - std::numbers::pi * std::cos(ps) / std::sin(ps);
    } else {
        value = digamma_right(s);
    }
    ValueWithError out;
    out.value = value;
    out.error_bound = 64.0 * kEps * (1.0 + std::abs(value) + std::abs(s));
    out.bound_kind = BoundKind::Heuristic;
    out.terms_used = kStirlingTerms;
    return out;
}

}  // namespace eulersums::numeric
