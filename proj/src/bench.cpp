#include "eulersums/bench.hpp"

#include "eulersums/numeric.hpp"
#include "eulersums/simd/kernels.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace eulersums::bench {

namespace {

constexpr std::size_t kBlock = 1 << 14;

const char* name(Series f) {
    switch (f) {
        case Series::U: return "u";
        case Series::V: return "v";
        case Series::W: return "w";
    }
    return "?";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double reference_value(Series f, double s) {
    switch (f) {
        case Series::U: return numeric::direct_u(s).value.real();
        case Series::V: return numeric::direct_v(s).value.real();
        case Series::W: return numeric::direct_w(s).value.real();
    }
    throw std::logic_error("reference_value: unknown series");
}

BenchRow run_naive(Series f, double s, int digits, std::size_t term_cap) {
    const bool alternating = f != Series::W;
    if (alternating ? !(s > 0.0) : !(s > 1.0)) throw std::invalid_argument("naive summation diverges at this s");
    if (digits < 1 || digits > 15) throw std::invalid_argument("digits must lie in 1..15");
    const double target = 0.5 * std::pow(10.0, -digits);
    const bool alt_h = f != Series::U;

    // remainder bound after n terms; H is H_{n+1} (or H_{n+1}^-)
    const auto bound_after = [&](std::size_t n, double h_next) {
        const double next = static_cast<double>(n + 1);
        if (alternating) return std::abs(h_next) * std::pow(next, -s);
        return std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
    };

    const auto start = std::chrono::steady_clock::now();
    std::vector<double> weights(kBlock);
    std::vector<double> harmonic(kBlock + 1);
    double h = 0.0;
    double comp = 0.0;
    double sum = 0.0;
    double sum_comp = 0.0;
    std::size_t done = 0;
    double bound = 0.0;
    bool converged = false;
    while (done < term_cap) {
        const std::size_t count = std::min(kBlock, term_cap - done);
        // harmonic[i] = H_{done+i+1}, one past the block for the next-term bound
        double h_saved = h;
        double comp_saved = comp;
        for (std::size_t i = 0; i <= count; ++i) {
            const std::size_t n = done + i + 1;
            const double term = (alt_h && n % 2 == 0) ? -1.0 / static_cast<double>(n) : 1.0 / static_cast<double>(n);
            const double y = term - comp;
            const double t = h + y;
            comp = (t - h) - y;
            h = t;
            harmonic[i] = h;
            if (i + 1 == count) {
                h_saved = h;
                comp_saved = comp;
            }
        }
        h = h_saved;
        comp = comp_saved;
        // smallest m in [1, count] whose bound after done+m terms meets the target
        std::size_t take = count;
        if (bound_after(done + count, harmonic[count]) <= target) {
            std::size_t lo = 0;
            std::size_t hi = count;
            while (hi - lo > 1) {
                const std::size_t mid = (lo + hi) / 2;
                if (bound_after(done + mid, harmonic[mid]) <= target) hi = mid; else lo = mid;
            }
            take = hi;
            converged = true;
        }
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t n = done + i + 1;
            weights[i] = (alternating && n % 2 == 0) ? -harmonic[i] : harmonic[i];
        }
        const auto part = simd::shifted_power_sum(std::span<const double>(weights.data(), take),
                                                  static_cast<double>(done + 1), 0.0, s);
        const double y = part.sum - sum_comp;
        const double t = sum + y;
        sum_comp = (t - sum) - y;
        sum = t;
        done += take;
        bound = bound_after(done, harmonic[take]);
        if (converged) break;
    }

    BenchRow row;
    row.function = name(f);
    row.method = "naive";
    row.s = s;
    row.digits = digits;
    row.terms = done;
    row.value = sum;
    row.error_bound = bound;
    row.seconds = seconds_since(start);
    row.converged = converged;
    row.error = std::abs(sum - reference_value(f, s));
    return row;
}

BenchRow run_boole(Series f, double s, int digits) {
    if (digits < 1 || digits > 15) throw std::invalid_argument("digits must lie in 1..15");
    numeric::AccelConfig cfg;
    cfg.tol = 0.5 * std::pow(10.0, -digits);
    const auto start = std::chrono::steady_clock::now();
    numeric::ValueWithError v;
    switch (f) {
        case Series::U: v = numeric::u_num(s, cfg); break;
        case Series::V: v = numeric::v_num(s, cfg); break;
        case Series::W: v = numeric::w_num(s, cfg); break;
    }
    BenchRow row;
    row.function = name(f);
    row.method = "boole";
    row.s = s;
    row.digits = digits;
    row.seconds = seconds_since(start);
    row.terms = v.terms_used;
    row.value = v.value.real();
    row.error_bound = v.error_bound;
    row.converged = true;
    row.error = std::abs(row.value - reference_value(f, s));
    return row;
}

std::vector<BenchRow> run(Series f, double s, const std::vector<Method>& methods, int digits) {
    std::vector<BenchRow> rows;
    for (const Method m : methods) rows.push_back(m == Method::Naive ? run_naive(f, s, digits) : run_boole(f, s, digits));
    return rows;
}

}  // namespace eulersums::bench
