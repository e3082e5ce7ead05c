#include "internal.hpp"

#include "eulersums/simd/kernels.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace eulersums::numeric {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Coefficient c_n of a series sum_n c_n (n + offset)^{-s}.
using Coefficients = std::function<void(std::vector<double>&)>;

struct SeriesDef {
    const char* name;
    double abscissa;           // series converges for Re s > abscissa
    double offset;             // base is n + offset
    std::vector<double> steps; // exponent shifts relative to s, in elimination order
    Coefficients fill;         // fills c_1..c_M (index n-1)
};

// Partial sums over 2 N_i terms, N_i = first_pairs 2^i, then Richardson
// elimination of the error terms N^{-(s + step)}.
ValueWithError richardson(Complex s, const OracleConfig& cfg, const SeriesDef& series) {
    if (!(s.real() > series.abscissa)) {
        throw EvalError(ErrorKind::NonConvergence, std::string(series.name) + ": s is outside the convergence half-plane");
    }
    if (cfg.first_pairs == 0 || cfg.levels < 1) throw std::invalid_argument("oracle: empty configuration");
    const int levels = cfg.levels;
    const std::size_t total = 2 * cfg.first_pairs << levels;
    std::vector<double> c(total);
    series.fill(c);

    std::vector<Complex> sums(static_cast<std::size_t>(levels) + 1);
    Complex running{};
    double abs_running = 0.0;
    std::size_t done = 0;
    for (int i = 0; i <= levels; ++i) {
        const std::size_t end = 2 * cfg.first_pairs << i;
        std::span<const double> block(c.data() + done, end - done);
        const double first = static_cast<double>(done + 1);
        if (s.imag() == 0.0) {
            const auto r = simd::shifted_power_sum(block, first, series.offset, s.real());
            running += r.sum;
            abs_running += r.abs_sum;
        } else {
            const auto r = simd::shifted_power_sum(block, first, series.offset, s);
            running += r.sum;
            abs_running += r.abs_sum;
        }
        sums[i] = running;
        done = end;
    }

    // tableau[i][j]; only the previous row is needed
    const std::size_t depth = std::min<std::size_t>(series.steps.size(), static_cast<std::size_t>(levels));
    std::vector<Complex> prev(depth + 1);
    std::vector<Complex> row(depth + 1);
    std::vector<double> amp(depth + 1, 1.0);
    for (std::size_t j = 1; j <= depth; ++j) {
        const Complex f = std::pow(Complex{2.0, 0.0}, s + series.steps[j - 1]);
        amp[j] = amp[j - 1] * (std::abs(f) + 1.0) / std::abs(f - 1.0);
    }

    Complex best{};
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= levels; ++i) {
        row[0] = sums[i];
        const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(i), depth);
        for (std::size_t j = 1; j <= width; ++j) {
            const Complex f = std::pow(Complex{2.0, 0.0}, s + series.steps[j - 1]);
            row[j] = (f * row[j - 1] - prev[j - 1]) / (f - 1.0);
        }
        if (i == levels) {
            for (std::size_t j = 1; j <= width; ++j) {
                // disagreement with the previous column and the previous row
                const double diff = std::abs(row[j] - row[j - 1]);
                const double diff_row = j < static_cast<std::size_t>(i) ? std::abs(row[j] - prev[j]) : diff;
                const double err = std::max(diff, diff_row) + 4.0 * kEps * abs_running * amp[j];
                if (err < best_err) {
                    best_err = err;
                    best = row[j];
                }
            }
        }
        std::swap(prev, row);
    }

    ValueWithError out;
    out.value = best;
    out.error_bound = best_err;
    out.bound_kind = BoundKind::Heuristic;
    out.terms_used = total;
    if (!std::isfinite(best_err) || best_err > cfg.tol * std::max(1.0, std::abs(best))) {
        throw EvalError(ErrorKind::NonConvergence, std::string(series.name) + ": extrapolated error " +
                                                       detail::sci(best_err) + " exceeds tolerance");
    }
    return out;
}

std::vector<double> steps(double start, int count, int repeat) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
        for (int r = 0; r < repeat; ++r) out.push_back(start + k);
    }
    return out;
}

// c[n-1] = (-1)^{n-1} H_n or H_n (H_n^- if alternating_h), with H accumulated by Kahan summation.
void fill_harmonic(std::vector<double>& c, bool alternating_h, bool alternating_sign) {
    double h = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        const double term = (alternating_h && i % 2 == 1) ? -1.0 / n : 1.0 / n;
        const double y = term - comp;
        const double t = h + y;
        comp = (t - h) - y;
        h = t;
        const bool negative = alternating_sign && i % 2 == 1;
        c[i] = negative ? -h : h;
    }
}

}  // namespace

ValueWithError direct_u(Complex s, const OracleConfig& cfg) {
    return richardson(s, cfg,
                      {"direct_u", 0.0, 0.0, steps(0.0, cfg.levels, 2),
                       [](std::vector<double>& c) { fill_harmonic(c, false, true); }});
}

ValueWithError direct_v(Complex s, const OracleConfig& cfg) {
    return richardson(s, cfg,
                      {"direct_v", 0.0, 0.0, steps(0.0, cfg.levels, 1),
                       [](std::vector<double>& c) { fill_harmonic(c, true, true); }});
}

ValueWithError direct_w(Complex s, const OracleConfig& cfg) {
    return richardson(s, cfg,
                      {"direct_w", 1.0, 0.0, steps(-1.0, cfg.levels, 1),
                       [](std::vector<double>& c) { fill_harmonic(c, true, false); }});
}

ValueWithError direct_shifted_alt(Complex s, const OracleConfig& cfg) {
    // (-1)^n H_n^- / (n+1)^s: base n + 1, sign negative for odd n
    return richardson(s, cfg,
                      {"direct_shifted_alt", 0.0, 1.0, steps(0.0, cfg.levels, 1),
                       [](std::vector<double>& c) {
                           fill_harmonic(c, true, true);
                           for (auto& x : c) x = -x;
                       }});
}

}  // namespace eulersums::numeric
