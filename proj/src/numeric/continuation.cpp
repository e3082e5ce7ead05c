#include "internal.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace eulersums::numeric {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Accumulator {
    Complex value;
    double error = 0.0;
    double magnitude = 0.0;
    bool heuristic = false;
    std::size_t terms = 0;

    void add(Complex coef, const ValueWithError& v) {
        value += coef * v.value;
        error += std::abs(coef) * v.error_bound;
        magnitude += std::abs(coef * v.value);
        heuristic = heuristic || v.bound_kind == BoundKind::Heuristic;
        terms += v.terms_used;
    }

    ValueWithError finish(double scale) const {
        ValueWithError out;
        out.value = value * scale;
        out.error_bound = (error + 8.0 * kEps * magnitude) * std::abs(scale);
        out.bound_kind = heuristic ? BoundKind::Heuristic : BoundKind::Rigorous;
        out.terms_used = terms;
        return out;
    }
};

// pr[k] = (s)_k / k! for k = 0..count.
std::vector<Complex> rising_over_factorial(Complex s, int count) {
    std::vector<Complex> pr(static_cast<std::size_t>(count) + 1);
    pr[0] = 1.0;
    for (int k = 1; k <= count; ++k) pr[k] = pr[k - 1] * (s + static_cast<double>(k - 1)) / static_cast<double>(k);
    return pr;
}

int checked_q(Complex s, const AccelConfig& cfg, bool strict) {
    const int q = cfg.resolved_q(s);
    if (q > detail::kMaxQ) {
        throw EvalError(ErrorKind::UnsupportedRegion,
                        "truncation order " + std::to_string(q) + " exceeds " + std::to_string(detail::kMaxQ));
    }
    if (strict && !(q > 1.0 + std::abs(s.real()))) {
        throw std::invalid_argument("q = " + std::to_string(q) + " must exceed 1 + |Re s|");
    }
    return q;
}

bool is_zero(Complex z) { return z == Complex{0.0, 0.0}; }

// Shared body of the Euler-Boole representations of u (eta, phi^-) and v (zeta, phi^+).
ValueWithError euler_boole(Complex s, const AccelConfig& cfg, bool use_zeta) {
    const int q = checked_q(s, cfg, true);
    const auto pr = rising_over_factorial(s, 2 * q);
    const int pieces = q + 2;
    const double target = 0.1 * cfg.tol / pieces;
    const auto special = [&](Complex x, double tgt) {
        return use_zeta ? detail::zeta_core(x, cfg, tgt) : detail::eta_core(x, cfg, tgt);
    };

    Accumulator acc;
    acc.add(1.0, special(s + 1.0, target));
    for (int m = 0; m < q; ++m) {
        const Complex coef = pr[2 * m + 1] * detail::euler_zero_scaled(2 * m + 1) * std::tgamma(2.0 * m + 2.0);
        if (is_zero(coef)) continue;
        acc.add(-coef, special(s + (2.0 * m + 2.0), target / std::abs(coef)));
    }
    // (s)_{2q} / (2q-1)! = 2q pr[2q]
    const Complex coef = 2.0 * q * pr[2 * q];
    if (!is_zero(coef)) {
        const auto kind = use_zeta ? detail::PhiKind::Plain : detail::PhiKind::Alternating;
        acc.add(coef, detail::remainder_integral(detail::KernelKind::EulerReflected, 2 * q - 1, kind,
                                                 s + 2.0 * q, cfg, target / std::abs(coef)));
    }
    return acc.finish(0.5);
}

bool near_v_pole(Complex s, double radius) {
    if (std::abs(s) < radius) return true;
    if (s.real() > -0.5) return false;
    // odd negative integers
    const double k = std::round((s.real() + 1.0) / 2.0);
    return std::abs(s - Complex{2.0 * k - 1.0, 0.0}) < radius;
}

}  // namespace

ValueWithError u_num(Complex s, const AccelConfig& cfg) {
    return detail::require_tolerance(euler_boole(s, cfg, false), cfg, "u");
}

ValueWithError v_num(Complex s, const AccelConfig& cfg) {
    if (near_v_pole(s, cfg.tol)) throw EvalError(ErrorKind::PoleProximity, "v: s is within tolerance of a pole");
    return detail::require_tolerance(euler_boole(s, cfg, true), cfg, "v");
}

ValueWithError w_num(Complex s, const AccelConfig& cfg) {
    if (std::abs(s - 1.0) < cfg.tol) throw EvalError(ErrorKind::PoleProximity, "w: s is within tolerance of 1");
    const int q = checked_q(s, cfg, false);
    if (!(s.real() + 2.0 * q + 1.0 > 2.0)) {
        throw std::invalid_argument("q = " + std::to_string(q) + " too small: need Re s + 2q + 1 > 2");
    }
    const auto pr = rising_over_factorial(s, 2 * q + 1);
    const double target = 0.1 * cfg.tol / (q + 3);

    Accumulator acc;
    const Complex pole_coef = 1.0 / (s - 1.0);
    acc.add(pole_coef, detail::eta_core(s, cfg, target / std::abs(pole_coef)));
    acc.add(0.5, detail::eta_core(s + 1.0, cfg, 2.0 * target));
    for (int m = 1; m <= q; ++m) {
        // (s)_{2m-1}/(2m)! B_{2m} = pr[2m-1] B_{2m} / (2m)
        const Complex coef = pr[2 * m - 1] * detail::bernoulli_scaled(2 * m) * std::tgamma(2.0 * m);
        if (is_zero(coef)) continue;
        acc.add(coef, detail::eta_core(s + 2.0 * m, cfg, target / std::abs(coef)));
    }
    const Complex coef = -pr[2 * q + 1];
    if (!is_zero(coef)) {
        acc.add(coef, detail::remainder_integral(detail::KernelKind::Bernoulli, 2 * q + 1, detail::PhiKind::Alternating,
                                                 s + (2.0 * q + 1.0), cfg, target / std::abs(coef)));
    }
    return detail::require_tolerance(acc.finish(1.0), cfg, "w");
}

}  // namespace eulersums::numeric
