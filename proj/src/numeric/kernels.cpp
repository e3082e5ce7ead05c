#include "internal.hpp"

#include "eulersums/quadrature.hpp"
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
constexpr long kDirectCap = 256;
constexpr unsigned kMaxExpansion = 60;
constexpr int kCheckedPeriods = 4;

// Weights (-1)^{n-1}/n or 1/n for n = 1..count.
const std::vector<double>& phi_weights(detail::PhiKind kind) {
    static const auto build = [](bool alternating) {
        std::vector<double> w(kDirectCap * 64);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double n = static_cast<double>(i + 1);
            w[i] = (alternating && i % 2 == 1) ? -1.0 / n : 1.0 / n;
        }
        return w;
    };
    static const std::vector<double> alternating = build(true);
    static const std::vector<double> plain = build(false);
    return kind == detail::PhiKind::Alternating ? alternating : plain;
}

Complex partial_phi(detail::PhiKind kind, Complex sigma, double t, long count, double& abs_sum) {
    const auto& all = phi_weights(kind);
    std::span<const double> w(all.data(), static_cast<std::size_t>(count));
    if (sigma.imag() == 0.0) {
        const auto r = simd::shifted_power_sum(w, 1.0, t, sigma.real());
        abs_sum = r.abs_sum;
        return r.sum;
    }
    const auto r = simd::shifted_power_sum(w, 1.0, t, sigma);
    abs_sum = r.abs_sum;
    return r.sum;
}

// Smallest N for which the direct truncation after N terms is provably below
// eps, or -1 if it exceeds kDirectCap.
long direct_cutoff(detail::PhiKind kind, Complex sigma, double t, double eps) {
    const double sr = sigma.real();
    const bool alternating_real = kind == detail::PhiKind::Alternating && sigma.imag() == 0.0;
    const auto tail = [&](long n) {
        if (alternating_real) return 1.0 / ((n + 1.0) * std::pow(n + 1.0 + t, sr));
        // sum_{k>n} 1/(k (k+t)^sr) <= (1/n) int_n^inf (x+t)^{-sr} dx
        if (sr <= 1.0) return std::numeric_limits<double>::infinity();
        return std::pow(n + t, 1.0 - sr) / (n * (sr - 1.0));
    };
    if (tail(kDirectCap) > eps) return -1;
    long lo = 0;
    long hi = kDirectCap;
    while (hi - lo > 1) {
        const long mid = (lo + hi) / 2;
        if (mid > 0 && tail(mid) <= eps) hi = mid; else lo = mid;
    }
    return hi;
}

// Tail sum_{n>=N} f(n) (Plain) or sum_{k>=0} (-1)^k f(N+k) (Alternating) for
// f(x) = 1/(x (x+t)^sigma), from the Euler-Maclaurin / Euler-Boole expansion at
// x = N. g_k = f^{(k)}(N)/k! is assembled from the Leibniz rule and bounded by
// S_k N^{-1-Re sigma-k}, S_k = sum_{i<=k} |(sigma)_i / i!|.
ValueWithError expansion_tail(detail::PhiKind kind, Complex sigma, double t, double n, double eps) {
    const double sr = sigma.real();
    const unsigned kmax = 2 * kMaxExpansion + 2;
    std::vector<Complex> c(kmax + 1);  // (sigma)_i / i!
    std::vector<double> s_abs(kmax + 1);
    c[0] = 1.0;
    s_abs[0] = 1.0;
    for (unsigned i = 1; i <= kmax; ++i) {
        c[i] = c[i - 1] * (sigma + static_cast<double>(i - 1)) / static_cast<double>(i);
        s_abs[i] = s_abs[i - 1] + std::abs(c[i]);
    }
    const Complex base = detail::pow_neg(n + t, sigma);
    std::vector<Complex> a(kmax + 1);  // c_i (N+t)^{-sigma-i}
    std::vector<double> b(kmax + 1);   // N^{-1-j}
    for (unsigned i = 0; i <= kmax; ++i) {
        a[i] = c[i] * base * std::pow(n + t, -static_cast<double>(i));
        b[i] = std::pow(n, -1.0 - i);
    }
    const auto g = [&](unsigned k) {
        Complex acc{};
        for (unsigned j = 0; j <= k; ++j) acc += b[j] * a[k - j];
        return (k % 2 == 0) ? acc : -acc;
    };
    const auto majorant = [&](unsigned k) { return s_abs[k] * std::pow(n, -1.0 - sr - k); };

    ValueWithError best;
    best.error_bound = std::numeric_limits<double>::infinity();
    Complex acc{};
    double abs_acc = 0.0;

    if (kind == detail::PhiKind::Plain) {
        // int_N^inf f = sum_k (-1)^k c_k t^k N^{-sigma-k} / (sigma+k), t/N <= 1/2
        Complex integral{};
        const double ratio = t / n;
        Complex term_scale = detail::pow_neg(n, sigma);
        double integral_err = 0.0;
        double tk = 1.0;
        Complex ck = 1.0;
        for (unsigned k = 0;; ++k) {
            const Complex term = ck * tk * term_scale / (sigma + static_cast<double>(k));
            integral += (k % 2 == 0) ? term : -term;
            const double growth = std::max(1.0, std::abs(sigma + static_cast<double>(k)) / (k + 1.0));
            const double r = ratio * growth;
            if (ratio == 0.0) break;
            const double next = std::abs(term) * r;
            if (r < 1.0 && next / (1.0 - r) < 0.01 * eps) {
                integral_err = next / (1.0 - r);
                break;
            }
            if (k > 4000) throw EvalError(ErrorKind::NonConvergence, "phi: tail integral series stalled");
            ck = ck * (sigma + static_cast<double>(k)) / (k + 1.0);
            tk *= t;
            term_scale /= n;
        }
        const Complex f0 = g(0);
        acc = integral + 0.5 * f0;
        abs_acc = std::abs(integral) + 0.5 * std::abs(f0);
        for (unsigned m = 1; m <= kMaxExpansion; ++m) {
            // B_{2m}/(2m)! f^{(2m-1)}(N) = B_{2m}/(2m) g_{2m-1}
            const double b2m = detail::bernoulli_scaled(2 * m) * std::tgamma(2.0 * m);
            const Complex term = b2m * g(2 * m - 1);
            acc -= term;
            abs_acc += std::abs(term);
            const unsigned k = 2 * m + 1;
            const double bound = bernoulli_sup_norm(k) * majorant(k) / (sr + k) + integral_err;
            if (bound < best.error_bound) {
                best.value = acc;
                best.error_bound = bound;
                best.terms_used = m;
            }
            if (bound <= eps) break;
        }
    } else {
        for (unsigned m = 0; m < 2 * kMaxExpansion; ++m) {
            const double em = detail::euler_zero_scaled(m) * std::tgamma(m + 1.0);
            if (em != 0.0) {
                const Complex term = 0.5 * em * g(m);
                acc += term;
                abs_acc += std::abs(term);
            }
            const unsigned p = m + 1;
            const double bound =
                0.5 * detail::euler_sup_scaled(p - 1) * std::tgamma(p + 1.0) * majorant(p) / (sr + p);
            if (bound < best.error_bound) {
                best.value = acc;
                best.error_bound = bound;
                best.terms_used = p;
            }
            if (bound <= eps) break;
        }
    }
    best.error_bound += 8.0 * kEps * abs_acc;
    best.bound_kind = BoundKind::Rigorous;
    return best;
}

}  // namespace

namespace detail {

ValueWithError phi_core(PhiKind kind, Complex sigma, double t, double eps) {
    if (!(t >= 0.0)) throw std::invalid_argument("phi: t must be non-negative");
    if (sigma.real() <= 0.0) throw EvalError(ErrorKind::UnsupportedRegion, "phi: requires Re s > 0");

    ValueWithError out;
    out.bound_kind = BoundKind::Rigorous;
    double abs_sum = 0.0;
    const long direct = direct_cutoff(kind, sigma, t, eps);
    if (direct > 0) {
        out.value = partial_phi(kind, sigma, t, direct, abs_sum);
        const double sr = sigma.real();
        const bool alternating_real = kind == PhiKind::Alternating && sigma.imag() == 0.0;
        out.error_bound = alternating_real ? 1.0 / ((direct + 1.0) * std::pow(direct + 1.0 + t, sr))
                                           : std::pow(direct + t, 1.0 - sr) / (direct * (sr - 1.0));
        out.error_bound += 4.0 * kEps * abs_sum;
        out.terms_used = static_cast<std::size_t>(direct);
        return out;
    }

    const double n = std::max({24.0, std::ceil(2.0 * t) + 2.0, std::ceil(std::abs(sigma)) + 24.0});
    const long count = static_cast<long>(n) - 1;
    if (count > static_cast<long>(phi_weights(kind).size())) {
        throw EvalError(ErrorKind::NonConvergence, "phi: shift t too large for the tail expansion");
    }
    const Complex head = partial_phi(kind, sigma, t, count, abs_sum);
    auto tail = expansion_tail(kind, sigma, t, n, eps);
    const double sign = (kind == PhiKind::Alternating && count % 2 == 1) ? -1.0 : 1.0;  // (-1)^{N-1}
    out.value = head + sign * tail.value;
    out.error_bound = tail.error_bound + 4.0 * kEps * abs_sum;
    out.terms_used = static_cast<std::size_t>(count) + tail.terms_used;
    return out;
}

ValueWithError remainder_integral(KernelKind kernel, unsigned order, PhiKind phi, Complex sigma,
                                  const AccelConfig& cfg, double target) {
    const double sr = sigma.real();
    if (sr <= 2.0) {
        throw EvalError(ErrorKind::UnsupportedRegion, "remainder integral needs Re(s) + order > 2; raise q");
    }
    const std::vector<double>& coeffs =
        kernel == KernelKind::EulerReflected ? euler_poly_coeffs(order) : bernoulli_poly_coeffs(order);
    const double sup = kernel == KernelKind::EulerReflected ? euler_sup_norm(order) : bernoulli_sup_norm(order);

    // Kernel on [j, j+1] at t = j + x. For Ebar_k(-t): -t = -(j+1) + (1-x).
    const auto kernel_at = [&](long j, double x) {
        double y = x;
        double sign = 1.0;
        if (kernel == KernelKind::EulerReflected) {
            y = 1.0 - x;
            sign = ((j + 1) % 2 == 0) ? 1.0 : -1.0;
        }
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
        return sign * acc;
    };

    // The rule must integrate the degree-`order` kernel exactly, so it never
    // drops below order/2 + 8 nodes.
    const std::size_t nodes =
        std::max<std::size_t>(static_cast<std::size_t>(std::max(cfg.quad_nodes, 1)), order / 2 + 8);
    const auto& rule = quad::gauss_legendre_unit(nodes);
    const auto& fine_rule = quad::gauss_legendre_unit(2 * nodes);

    double phi_err = 0.0;
    std::size_t evaluations = 0;
    const auto period = [&](long j, const quad::Rule& r, bool track) {
        Complex acc{};
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double t = static_cast<double>(j) + r.nodes[i];
            const double eps = target * 0.1 / (std::max(sup, 1e-300) * (1.0 + t) * (1.0 + t));
            const auto p = phi_core(phi, sigma, t, eps);
            const double k = kernel_at(j, r.nodes[i]);
            acc += r.weights[i] * k * p.value;
            if (track) phi_err += r.weights[i] * std::abs(k) * p.error_bound;
            evaluations += p.terms_used + 1;
        }
        return acc;
    };
    // int_T^inf |K phi| <= sup * (1+T)^{1-sr}/(sr-1) * (1 + (1+T)/(sr-2))
    const auto tail_bound = [&](double periods) {
        return sup * std::pow(1.0 + periods, 1.0 - sr) / (sr - 1.0) * (1.0 + (1.0 + periods) / (sr - 2.0));
    };

    Complex total{};
    double quad_err = 0.0;
    double abs_total = 0.0;
    long j = 0;
    for (; j < cfg.period_cap; ++j) {
        Complex contribution;
        if (j < kCheckedPeriods) {
            const Complex coarse = period(j, rule, false);
            contribution = period(j, fine_rule, true);
            quad_err += 2.0 * std::abs(contribution - coarse);
        } else {
            contribution = period(j, rule, true);
        }
        total += contribution;
        abs_total += std::abs(contribution);
        if (std::abs(contribution) < 0.1 * target && tail_bound(static_cast<double>(j + 1)) < 0.5 * target) {
            ++j;
            break;
        }
    }
    const double tail = tail_bound(static_cast<double>(j));
    if (tail > target && j >= cfg.period_cap) {
        throw EvalError(ErrorKind::QuadratureFailure,
                        "remainder integral: period cap " + std::to_string(cfg.period_cap) + " reached");
    }
    ValueWithError out;
    out.value = total;
    out.error_bound = quad_err + phi_err + tail + 8.0 * kEps * abs_total;
    out.bound_kind = BoundKind::Heuristic;
    out.terms_used = evaluations;
    return out;
}

}  // namespace detail

ValueWithError phi_minus(Complex s, double t, const AccelConfig& cfg) {
    return detail::require_tolerance(detail::phi_core(detail::PhiKind::Alternating, s, t, cfg.tol * 0.1), cfg,
                                     "phi-");
}

ValueWithError phi_plus(Complex s, double t, const AccelConfig& cfg) {
    return detail::require_tolerance(detail::phi_core(detail::PhiKind::Plain, s, t, cfg.tol * 0.1), cfg, "phi+");
}

}  // namespace eulersums::numeric
