// Compiled with -mavx2 -mfma; only ever called after a runtime CPU check.

#include "eulersums/simd/kernels.hpp"

#include <immintrin.h>

#include <array>
#include <cmath>
#include <cstdint>

namespace eulersums::simd::avx2 {

namespace {

// Split ln 2; the high part has 21 trailing zero bits, so n * kLn2Hi is exact
// for every exponent we can meet.
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kLog2e = 1.44269504088896338700e+00;
constexpr double kTwo52 = 4503599627370496.0;

// Natural log for positive normal inputs. x = 2^e m with m in [sqrt(1/2), sqrt(2)),
// log m = 2 atanh((m-1)/(m+1)) summed to f^23; |f| <= 0.1716.
inline __m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_field = _mm256_srli_epi64(bits, 52);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(exp_field, _mm256_set1_epi64x(0x4330000000000000LL))),
        _mm256_set1_pd(kTwo52 + 1023.0));
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                                    _mm256_set1_epi64x(0x3FF0000000000000LL)));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.41421356237309504880), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, one));

    const __m256d f = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d f2 = _mm256_mul_pd(f, f);
    __m256d p = _mm256_set1_pd(1.0 / 23.0);
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 21.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 19.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / 3.0));
    // log m = 2f + 2f * f2 * p, keeping the leading 2f exact.
    const __m256d two_f = _mm256_add_pd(f, f);
    const __m256d log_m = _mm256_fmadd_pd(_mm256_mul_pd(two_f, f2), p, two_f);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), log_m));
}

// exp for y in [-708.39, 709.78]; inputs below flush to zero.
inline __m256d exp_pd(__m256d y) {
    const __m256d lo = _mm256_set1_pd(-708.39);
    const __m256d underflow = _mm256_cmp_pd(y, lo, _CMP_LT_OQ);
    y = _mm256_max_pd(y, lo);
    y = _mm256_min_pd(y, _mm256_set1_pd(709.78));
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(y, _mm256_set1_pd(kLog2e)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), y);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);
    // Taylor to r^13 / 13!, |r| <= ln2 / 2.
    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    // 2^n from the low mantissa bits of 2^52 + 1023 + n.
    const __m256i biased = _mm256_castpd_si256(_mm256_add_pd(n, _mm256_set1_pd(kTwo52 + 1023.0)));
    const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
    return _mm256_andnot_pd(underflow, _mm256_mul_pd(p, scale));
}

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

inline void neumaier_add(__m256d& sum, __m256d& comp, __m256d term) {
    const __m256d t = _mm256_add_pd(sum, term);
    const __m256d sum_bigger = _mm256_cmp_pd(abs_pd(sum), abs_pd(term), _CMP_GE_OQ);
    const __m256d a = _mm256_add_pd(_mm256_sub_pd(sum, t), term);
    const __m256d b = _mm256_add_pd(_mm256_sub_pd(term, t), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(b, a, sum_bigger));
    sum = t;
}

}  // namespace

PowerSum shifted_power_sum(std::span<const double> weights, double first, double shift, double sigma) {
    const double base0 = first + shift;
    const __m256d neg_sigma = _mm256_set1_pd(-sigma);
    const __m256d base0v = _mm256_set1_pd(base0);
    __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();
    __m256d abs_sum = _mm256_setzero_pd();

    const std::size_t n = weights.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d w = _mm256_loadu_pd(weights.data() + i);
        const __m256d base = _mm256_add_pd(base0v, idx);
        const __m256d term = _mm256_mul_pd(w, exp_pd(_mm256_mul_pd(neg_sigma, log_pd(base))));
        neumaier_add(sum, comp, term);
        abs_sum = _mm256_add_pd(abs_sum, abs_pd(term));
        idx = _mm256_add_pd(idx, step);
    }
    if (i < n) {
        alignas(32) std::array<double, 4> tail{};
        for (std::size_t k = 0; i + k < n; ++k) tail[k] = weights[i + k];
        const __m256d w = _mm256_load_pd(tail.data());
        const __m256d base = _mm256_add_pd(base0v, idx);
        const __m256d term = _mm256_mul_pd(w, exp_pd(_mm256_mul_pd(neg_sigma, log_pd(base))));
        neumaier_add(sum, comp, term);
        abs_sum = _mm256_add_pd(abs_sum, abs_pd(term));
    }

    alignas(32) std::array<double, 4> s{};
    alignas(32) std::array<double, 4> c{};
    alignas(32) std::array<double, 4> a{};
    _mm256_store_pd(s.data(), sum);
    _mm256_store_pd(c.data(), comp);
    _mm256_store_pd(a.data(), abs_sum);
    double total = 0.0;
    double total_comp = 0.0;
    for (int k = 0; k < 4; ++k) {
        for (const double v : {s[k], c[k]}) {
            const double t = total + v;
            total_comp += std::abs(total) >= std::abs(v) ? (total - t) + v : (v - t) + total;
            total = t;
        }
    }
    return {total + total_comp, a[0] + a[1] + a[2] + a[3]};
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        __m256d acc = _mm256_setzero_pd();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(*it));
        }
        _mm256_storeu_pd(out.data() + i, acc);
    }
    for (; i < n; ++i) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = std::fma(acc, x[i], *it);
        out[i] = acc;
    }
}

void log_batch(std::span<const double> x, std::span<double> out) {
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) _mm256_storeu_pd(out.data() + i, log_pd(_mm256_loadu_pd(x.data() + i)));
    for (; i < x.size(); ++i) {
        alignas(32) std::array<double, 4> buf{1.0, 1.0, 1.0, 1.0};
        buf[0] = x[i];
        _mm256_store_pd(buf.data(), log_pd(_mm256_load_pd(buf.data())));
        out[i] = buf[0];
    }
}

void exp_batch(std::span<const double> x, std::span<double> out) {
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) _mm256_storeu_pd(out.data() + i, exp_pd(_mm256_loadu_pd(x.data() + i)));
    for (; i < x.size(); ++i) {
        alignas(32) std::array<double, 4> buf{};
        buf[0] = x[i];
        _mm256_store_pd(buf.data(), exp_pd(_mm256_load_pd(buf.data())));
        out[i] = buf[0];
    }
}

}  // namespace eulersums::simd::avx2
