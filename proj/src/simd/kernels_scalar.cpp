#include "eulersums/simd/kernels.hpp"

#include <cmath>

namespace eulersums::simd::scalar {

PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma) {
    // Neumaier summation; the terms of the series we feed here span many
    // orders of magnitude and the running sums reach millions of terms.
    double sum = 0.0;
    double comp = 0.0;
    double abs_sum = 0.0;
    const double base0 = first + shift;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double term = weights[i] * std::pow(base0 + static_cast<double>(i), -sigma);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        abs_sum += std::abs(term);
    }
    return {sum + comp, abs_sum};
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x[i] + *it;
        out[i] = acc;
    }
}

}  // namespace eulersums::simd::scalar
