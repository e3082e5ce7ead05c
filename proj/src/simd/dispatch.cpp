#include "eulersums/simd/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eulersums::simd {

namespace {

bool cpu_has_avx2() {
#if defined(EULERSUMS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("EULERSUMS_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return Backend::Scalar;
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw std::invalid_argument("simd backend '" + std::string(backend_name(b)) + "' is not available");
    }
    current().store(b, std::memory_order_relaxed);
}

PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma) {
#if defined(EULERSUMS_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) return avx2::shifted_power_sum(weights, first, shift, sigma);
#endif
    return scalar::shifted_power_sum(weights, first, shift, sigma);
}

ComplexPowerSum shifted_power_sum(std::span<const double> weights, double first, double shift,
                                  std::complex<double> sigma) {
    if (sigma.imag() == 0.0) {
        const auto r = shifted_power_sum(weights, first, shift, sigma.real());
        return {{r.sum, 0.0}, r.abs_sum};
    }
    std::complex<double> sum{};
    std::complex<double> comp{};
    double abs_sum = 0.0;
    const double base0 = first + shift;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double log_base = std::log(base0 + static_cast<double>(i));
        const double mag = weights[i] * std::exp(-sigma.real() * log_base);
        const double phase = -sigma.imag() * log_base;
        const std::complex<double> term{mag * std::cos(phase), mag * std::sin(phase)};
        const std::complex<double> y = term - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += std::abs(mag);
    }
    return {sum, abs_sum};
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
    if (out.size() < x.size()) throw std::invalid_argument("horner_batch: output span too small");
#if defined(EULERSUMS_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        avx2::horner_batch(coeffs, x, out);
        return;
    }
#endif
    scalar::horner_batch(coeffs, x, out);
}

}  // namespace eulersums::simd
