#pragma once

// Plain partial summation against the accelerated evaluators, measured in
// series terms and wall time.

#include <cstddef>
#include <string>
#include <vector>

namespace eulersums::bench {

enum class Series { U, V, W };
enum class Method { Naive, Boole };

struct BenchRow {
    std::string function;
    std::string method;
    double s = 0.0;
    int digits = 0;
    std::size_t terms = 0;  ///< series terms (plus quadrature nodes for boole)
    double value = 0.0;
    double error = 0.0;        ///< |value - reference|
    double error_bound = 0.0;  ///< the method's own bound
    double seconds = 0.0;
    bool converged = false;    ///< false when the naive sum hit its term cap
};

/// Default cap on naive terms.
inline constexpr std::size_t kNaiveTermCap = 1'000'000'000;

/// Partial sums until the bound on the remainder drops below 0.5 * 10^-digits.
/// u and v use the alternating next-term bound, w the integral bound
/// N^{1-s}/(s-1). Requires s > 0 (s > 1 for w).
BenchRow run_naive(Series f, double s, int digits, std::size_t term_cap = kNaiveTermCap);

/// The Euler-Boole / Euler-Maclaurin evaluator at tolerance 0.5 * 10^-digits.
BenchRow run_boole(Series f, double s, int digits);

/// Reference value from the direct-sum oracle.
double reference_value(Series f, double s);

std::vector<BenchRow> run(Series f, double s, const std::vector<Method>& methods, int digits);

}  // namespace eulersums::bench
