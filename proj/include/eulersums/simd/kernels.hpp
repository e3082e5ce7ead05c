#pragma once

// Data-parallel inner loops shared by the series evaluators.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant compiled in its own translation unit. The variant is picked
// once at startup from CPUID; EULERSUMS_SIMD=scalar in the environment, or
// set_backend(), forces the reference path. Both paths are checked against each
// other in tests/test_simd_kernels.cpp.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace eulersums::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
/// Throws std::invalid_argument if the backend is not available on this CPU.
void set_backend(Backend b);

/// Compensated sum plus the magnitude sum used for rounding-error bounds.
struct PowerSum {
    double sum = 0.0;
    double abs_sum = 0.0;  // sum of |w_i| * base_i^{-sigma}
};

/// sum_i weights[i] * (first + i + shift)^{-sigma} for real sigma.
/// Requires first + shift > 0.
PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma);

/// Same with complex sigma; always evaluated by the scalar path.
struct ComplexPowerSum {
    std::complex<double> sum;
    double abs_sum = 0.0;
};
ComplexPowerSum shifted_power_sum(std::span<const double> weights, double first, double shift,
                                  std::complex<double> sigma);

/// out[i] = sum_k coeffs[k] * x[i]^k (coefficients in increasing degree).
void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);

namespace scalar {
PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma);
void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
}  // namespace scalar

#if defined(EULERSUMS_HAVE_AVX2)
namespace avx2 {
PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma);
void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
/// Lane-wise log and exp, exposed for accuracy tests.
void log_batch(std::span<const double> x, std::span<double> out);
void exp_batch(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace eulersums::simd
