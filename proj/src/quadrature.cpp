#include "eulersums/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eulersums::quad {

namespace {

Rule build_gauss_legendre(std::size_t n) {
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi's initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 - (static_cast<double>(j) - 1.0) * p3) /
                     static_cast<double>(j);
            }
            dp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        // map [-1, 1] -> [0, 1]
        rule.nodes[i] = 0.5 * (1.0 - z);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

}  // namespace

const Rule& gauss_legendre_unit(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre_unit: n must be positive");
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<Rule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Rule>(build_gauss_legendre(n));
    return *slot;
}

Estimate gauss_legendre(const std::function<double(double)>& f, double a, double b, std::size_t nodes,
                        std::size_t panels) {
    if (panels == 0) throw std::invalid_argument("gauss_legendre: panels must be positive");
    const auto apply = [&](const Rule& rule) {
        double total = 0.0;
        const double width = (b - a) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            const double left = a + width * static_cast<double>(p);
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(left + width * rule.nodes[i]);
            total += width * acc;
        }
        return total;
    };
    const double coarse = apply(gauss_legendre_unit(nodes));
    const double fine = apply(gauss_legendre_unit(2 * nodes));
    return {fine, std::abs(fine - coarse), 3 * nodes * panels, true};
}

Estimate tanh_sinh(const std::function<double(double, double)>& f, double a, double b, double tol, int max_level) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTMax = 6.0;
    const double half_width = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    Estimate est;
    const auto node_sum = [&](double t) {
        const double u = kHalfPi * std::sinh(t);
        const double cu = std::cosh(u);
        const double weight = half_width * kHalfPi * std::cosh(t) / (cu * cu);
        // distance from the nearer endpoint, computed without cancellation
        const double dist = (b - a) / (std::exp(2.0 * std::abs(u)) + 1.0);
        if (!(dist > 0.0) || weight == 0.0) return 0.0;
        const double x = u < 0.0 ? a + dist : (u > 0.0 ? b - dist : mid);
        ++est.evaluations;
        return weight * f(x, dist);
    };

    double h = 1.0;
    double sum = node_sum(0.0);
    for (int k = 1; k * h <= kTMax; ++k) sum += node_sum(k * h) + node_sum(-k * h);
    double prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= kTMax; k += 2) sum += node_sum(k * h) + node_sum(-k * h);
        const double current = sum * h;
        est.value = current;
        est.error = std::abs(current - prev);
        if (level >= 3 && est.error <= tol) {
            est.converged = true;
            return est;
        }
        prev = current;
    }
    return est;
}

}  // namespace eulersums::quad
