#include "internal.hpp"

#include "eulersums/exact_numbers.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eulersums::numeric {

namespace detail {

namespace {

// lambda(m) = sum over odd j of j^{-m}, bounded above by a partial sum plus an
// integral tail.
double lambda_upper(unsigned m) {
    double sum = 0.0;
    constexpr int kTerms = 64;
    for (int j = 2 * kTerms - 1; j >= 1; j -= 2) sum += std::pow(static_cast<double>(j), -static_cast<double>(m));
    if (m == 1) throw std::domain_error("lambda(1) diverges");
    // sum_{j odd > 2K-1} j^{-m} <= (1/2) int_{2K-1}^inf x^{-m} dx
    const double tail = 0.5 * std::pow(2.0 * kTerms - 1.0, 1.0 - m) / (m - 1.0);
    return sum + tail;
}

struct ScaledTables {
    std::vector<double> euler_zero;  // E_m(0) / m!
    std::vector<double> bernoulli;   // B_m / m!
    std::vector<double> euler_sup;   // sup |E_k| / k!

    ScaledTables() {
        euler_zero.resize(kMaxTailTerms + 1);
        bernoulli.resize(kMaxTailTerms + 2);
        for (unsigned m = 0; m <= kMaxTailTerms; ++m) {
            euler_zero[m] = (exact::euler_zero(m) / Rational(factorial(m))).to_double();
        }
        for (unsigned m = 0; m <= kMaxTailTerms + 1; ++m) {
            bernoulli[m] = (exact::bernoulli(m) / Rational(factorial(m))).to_double();
        }
        euler_sup.resize(kMaxTailTerms + 1);
        euler_sup[0] = 1.0;
        for (unsigned k = 1; k <= kMaxTailTerms; ++k) {
            euler_sup[k] = 4.0 * lambda_upper(k + 1) / std::pow(std::numbers::pi, k + 1.0);
        }
    }
};

const ScaledTables& scaled() {
    static const ScaledTables tables;
    return tables;
}

template <class Build>
const std::vector<double>& cached_poly(std::map<unsigned, std::unique_ptr<std::vector<double>>>& cache, std::mutex& mu,
                                       unsigned k, Build build) {
    std::lock_guard lock(mu);
    auto& slot = cache[k];
    if (!slot) slot = std::make_unique<std::vector<double>>(build(k));
    return *slot;
}

}  // namespace

double euler_zero_scaled(unsigned m) {
    if (m > kMaxTailTerms) throw std::out_of_range("euler_zero_scaled: index too large");
    return scaled().euler_zero[m];
}

double bernoulli_scaled(unsigned m) {
    if (m > kMaxTailTerms + 1) throw std::out_of_range("bernoulli_scaled: index too large");
    return scaled().bernoulli[m];
}

double euler_sup_scaled(unsigned k) {
    if (k <= kMaxTailTerms) return scaled().euler_sup[k];
    return 4.0 * lambda_upper(k + 1) / std::pow(std::numbers::pi, k + 1.0);
}

double zeta_upper(unsigned k) {
    if (k < 2) throw std::domain_error("zeta_upper: k must be >= 2");
    double sum = 0.0;
    constexpr int kTerms = 64;
    for (int n = kTerms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -static_cast<double>(k));
    return sum + std::pow(static_cast<double>(kTerms), 1.0 - k) / (k - 1.0);
}

const std::vector<double>& euler_poly_coeffs(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<std::vector<double>>> cache;
    return cached_poly(cache, mu, k, [](unsigned n) {
        const auto poly = exact::euler_polynomial(n);
        std::vector<double> c(poly.degree() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = poly.coefficient(i).to_double();
        return c;
    });
}

const std::vector<double>& bernoulli_poly_coeffs(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<std::vector<double>>> cache;
    return cached_poly(cache, mu, k, [](unsigned n) {
        // B_n(x) = sum_j C(n, j) B_j x^{n-j}
        std::vector<double> c(n + 1, 0.0);
        for (unsigned j = 0; j <= n; ++j) {
            c[n - j] = (Rational(binomial(n, j)) * exact::bernoulli(j)).to_double();
        }
        return c;
    });
}

}  // namespace detail

double euler_bar(unsigned q, double t) {
    const double k = std::floor(t);
    const double x = t - k;
    const auto& c = detail::euler_poly_coeffs(q);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return std::fmod(k, 2.0) == 0.0 ? acc : -acc;
}

double bernoulli_bar(unsigned k, double t) {
    const double x = t - std::floor(t);
    const auto& c = detail::bernoulli_poly_coeffs(k);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double euler_sup_norm(unsigned k) {
    return detail::euler_sup_scaled(k) * factorial(k).get_d();
}

double bernoulli_sup_norm(unsigned k) {
    if (k == 0) return 1.0;
    if (k == 1) return 0.5;
    // |Bbar_k(t)| <= 2 k! zeta(k) / (2 pi)^k, attained for even k.
    return 2.0 * factorial(k).get_d() * detail::zeta_upper(k) / std::pow(2.0 * std::numbers::pi, static_cast<double>(k));
}

}  // namespace eulersums::numeric
