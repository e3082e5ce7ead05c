#include "eulersums/hankel.hpp"

#include "eulersums/exact_numbers.hpp"
#include "eulersums/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace eulersums::hankel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kCutoff = 64.0;
constexpr int kSeriesTerms = 20;

// B_{2k} / (2k (2k)!) for k = 1..kSeriesTerms
const std::array<double, kSeriesTerms>& series_coefficients() {
    static const auto table = [] {
        std::array<double, kSeriesTerms> c{};
        for (int k = 1; k <= kSeriesTerms; ++k) {
            const Rational b = exact::bernoulli(2 * k);
            c[k - 1] = (b / (Rational(2 * k) * Rational(factorial(2 * k)))).to_double();
        }
        return c;
    }();
    return table;
}

void check_domain(double s) {
    if (!(s > -1.0)) throw numeric::EvalError(numeric::ErrorKind::UnsupportedRegion, "G: real-axis integral needs s > -1");
    if (s == 0.0) {
        throw numeric::EvalError(numeric::ErrorKind::UnsupportedRegion, "G: s = 0 is served by the exact route only");
    }
    const double k = std::round(s);
    if (k >= 1.0 && std::abs(s - k) < 1e-12 * k) {
        throw numeric::EvalError(numeric::ErrorKind::PoleProximity, "G: s is a positive integer");
    }
}

}  // namespace

double log_factor_direct(double x) { return std::log(-std::expm1(-x)) - std::log(x); }

namespace {

// log((1-e^{-x})/x) / x = -1/2 + sum_k B_{2k} x^{2k-1} / (2k (2k)!), for x below the threshold
double log_factor_over_x(double x) {
    const auto& c = series_coefficients();
    const double x2 = x * x;
    double acc = 0.0;
    for (int k = kSeriesTerms - 1; k >= 0; --k) acc = acc * x2 + c[k];
    return -0.5 + acc * x;
}

}  // namespace

double log_factor(double x) {
    if (x >= kSeriesThreshold) return log_factor_direct(x);
    return x * log_factor_over_x(x);
}

Complex g_integrand(Complex s, double x) {
    const double weight = 1.0 / (std::exp(x) + 1.0);
    // near 0 pair x^{s-1} with the O(x) log factor so the power cannot overflow
    const bool small = x < kSeriesThreshold;
    const Complex exponent = small ? s : s - 1.0;
    const Complex power =
        (s.imag() == 0.0) ? Complex{std::pow(x, exponent.real()), 0.0} : std::exp(exponent * std::log(x));
    return power * weight * (small ? log_factor_over_x(x) : log_factor_direct(x));
}

ValueWithError g_num(double s, const AccelConfig& cfg) {
    check_domain(s);
    const auto f = [s](double x) { return g_integrand(s, x).real(); };

    const auto head = quad::tanh_sinh([&](double x, double) { return f(x); }, 0.0, 1.0, 0.01 * cfg.tol, 12);
    double value = head.value;
    double error = head.error;
    double magnitude = std::abs(head.value);
    std::size_t evaluations = head.evaluations;
    bool converged = head.converged;
    for (double a = 1.0; a < kCutoff; a *= 2.0) {
        const auto panel = quad::gauss_legendre(f, a, 2.0 * a, static_cast<std::size_t>(cfg.quad_nodes), 1);
        value += panel.value;
        error += panel.error;
        magnitude += std::abs(panel.value);
        evaluations += panel.evaluations;
    }
    // |integrand| <= x^{s-1} e^{-x} log x beyond the cutoff
    error += 2.0 * std::pow(kCutoff, s) * std::exp(-kCutoff) * std::log(kCutoff);
    error += 16.0 * kEps * magnitude;

    const auto gamma = numeric::gamma_num(s);
    ValueWithError out;
    out.value = value / gamma.value;
    out.error_bound = error / std::abs(gamma.value) + std::abs(out.value) * gamma.error_bound / std::abs(gamma.value);
    out.bound_kind = numeric::BoundKind::Heuristic;
    out.terms_used = evaluations;
    if (!converged || out.error_bound > cfg.tol * std::max(1.0, std::abs(out.value))) {
        throw numeric::EvalError(numeric::ErrorKind::QuadratureFailure,
                                 "G: quadrature error estimate above tolerance");
    }
    return out;
}

ResidualReport theorem4_residual(double s, const AccelConfig& cfg) {
    if (!(s > 0.0)) throw numeric::EvalError(numeric::ErrorKind::UnsupportedRegion, "the residual check needs s > 0");
    check_domain(s);
    ResidualReport report;
    report.s = s;
    report.lhs = g_num(s, cfg);

    const auto v = numeric::direct_v(s);
    const auto zeta = numeric::zeta_num(s + 1.0, cfg);
    const auto psi = numeric::digamma_num(s);
    const auto eta = numeric::eta_num(s, cfg);
    const auto eta_prime = numeric::eta_prime_num(s, cfg);

    report.rhs.value = v.value - zeta.value - psi.value * eta.value - eta_prime.value;
    report.rhs.error_bound = v.error_bound + zeta.error_bound + std::abs(psi.value) * eta.error_bound +
                             std::abs(eta.value) * psi.error_bound + eta_prime.error_bound;
    report.rhs.bound_kind = numeric::BoundKind::Heuristic;
    report.rhs.terms_used = v.terms_used + zeta.terms_used + eta.terms_used + eta_prime.terms_used;
    report.residual = std::abs(report.lhs.value - report.rhs.value);
    return report;
}

double log_series_check(double x, unsigned terms) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("log_series_check: x must lie in (0, 1]");
    const double lhs = std::log(-std::expm1(-x)) / (1.0 + std::exp(-x));
    double sum = 0.0;
    Rational h(0);
    for (unsigned n = 1; n <= terms; ++n) {
        h += Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        const double term = h.to_double() * std::exp(-static_cast<double>(n) * x);
        sum += (n % 2 == 1) ? -term : term;
    }
    return std::abs(lhs - sum);
}

}  // namespace eulersums::hankel
