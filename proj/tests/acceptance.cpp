// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "eulersums/bench.hpp"
#include "eulersums/closed_forms.hpp"
#include "eulersums/exact_numbers.hpp"
#include "eulersums/hankel.hpp"
#include "eulersums/numeric.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace eulersums;
using numeric::Complex;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        o.passed = false;
        o.detail << " [over budget " << budget_seconds << " s]";
    }
    if (!o.passed) ++failures;
    std::printf("%s %d %s (%.2f s)%s\n", o.passed ? "PASS" : "FAIL", id, title, seconds, o.detail.str().c_str());
    std::fflush(stdout);
}

closed::Log2Linear l2(long a_num, long a_den, long b_num, long b_den) {
    return {Rational(a_num, a_den), Rational(b_num, b_den)};
}

}  // namespace

int main() {
    criterion(1, "exact values u(0), u(-1), u(-2)", 1.0, [](Outcome& o) {
        o.require(closed::u_value(0) == l2(0, 1, 1, 2), "u(0) = ln2/2");
        o.require(closed::u_value(1) == l2(1, 4, -1, 4), "u(-1) = 1/4 - ln2/4");
        o.require(closed::u_value(2) == l2(-1, 8, 0, 1), "u(-2) = -1/8");
    });

    criterion(2, "corollary identity for n = 1..200", 30.0, [](Outcome& o) {
        // warm the Bernoulli table through B_400 inside the timed region
        o.require(exact::bernoulli(400) != Rational(0), "B_400");
        int bad = 0;
        for (unsigned n = 1; n <= 200; ++n) {
            // recomputed here so the check does not only trust the library's record
            const Rational lhs = Rational(factorial(2 * n)) * closed::c_coefficients(2 * n).back();
            const Rational rhs =
                (Rational(1, 4 * static_cast<long>(n)) + Rational(BigInt(1) << (2 * n - 1)) - Rational(1, 2)) *
                exact::bernoulli(2 * n);
            if (lhs != rhs || !closed::check_corollary1(n).passed) ++bad;
        }
        o.detail << " mismatches=" << bad;
        o.require(bad == 0, "exact equality");
    });

    criterion(3, "bridge identity for n = 1..200", 30.0, [](Outcome& o) {
        int bad = 0;
        for (unsigned n = 1; n <= 200; ++n) {
            const Rational lhs = Rational(factorial(2 * n)) * closed::c_coefficients(2 * n).back();
            const Rational rhs = closed::v_value_even(n) - closed::zeta_nonpositive(2 * n - 1);
            if (lhs != rhs || !closed::check_bridge(n).passed) ++bad;
        }
        o.detail << " mismatches=" << bad;
        o.require(bad == 0, "exact equality");
    });

    criterion(4, "u(2) = (5/8) zeta(3)", 1.0, [](Outcome& o) {
        const auto u = numeric::u_num(2.0);
        const auto z = numeric::zeta_num(3.0);
        const double diff = std::abs(u.value - 0.625 * z.value);
        o.detail << " diff=" << diff;
        o.require(diff < 1e-10, "|u - 5/8 zeta(3)| < 1e-10");
    });

    criterion(5, "continuation matches exact values", 10.0, [](Outcome& o) {
        double worst = 0.0;
        for (unsigned m = 0; m <= 6; ++m) {
            worst = std::max(worst, std::abs(numeric::u_num(-static_cast<double>(m)).value - closed::u_value(m).to_double()));
        }
        for (unsigned n = 1; n <= 3; ++n) {
            worst = std::max(worst,
                             std::abs(numeric::v_num(-2.0 * n).value - closed::v_value_even(n).to_double()));
        }
        for (unsigned m = 0; m <= 4; ++m) {
            worst = std::max(worst, std::abs(numeric::w_num(-static_cast<double>(m)).value - closed::w_value(m).to_double()));
        }
        o.detail << " worst=" << worst;
        o.require(worst < 1e-8, "all differences < 1e-8");
    });

    criterion(6, "G(s) = v - zeta(s+1) - psi eta - eta' at 0.5, 1.5, 2.5", 30.0, [](Outcome& o) {
        for (const double s : {0.5, 1.5, 2.5}) {
            const auto r = hankel::theorem4_residual(s);
            o.detail << " r(" << s << ")=" << r.residual;
            o.require(r.residual < 1e-8, "residual < 1e-8");
        }
    });

    criterion(7, "residues of v at 0 and w at 1", 5.0, [](Outcome& o) {
        for (const double h : {1e-2, 1e-3}) {
            const double vs = -h;
            const double v_dev = std::abs(vs * numeric::v_num(vs).value - 0.5);
            const double ws = 1.0 + h;
            const double w_dev = std::abs((ws - 1.0) * numeric::w_num(ws).value - std::log(2.0));
            o.detail << " h=" << h << ":" << v_dev / h << "," << w_dev / h;
            o.require(v_dev <= 10.0 * h, "|s v(s) - 1/2| <= 10|s|");
            o.require(w_dev <= 10.0 * h, "|(s-1) w(s) - ln 2| <= 10|s-1|");
        }
    });

    criterion(8, "structural invariants", 10.0, [](Outcome& o) {
        for (unsigned n = 1; n <= 100; ++n) {
            o.require(exact::euler_zero(2 * n).is_zero(), "E_2n(0) = 0");
            o.require(exact::euler_eval(n, Rational(1)) == -exact::euler_zero(n), "E_n(1) = -E_n(0)");
        }
        for (unsigned n = 1; n <= 200; ++n) {
            const Rational g = Rational(2) * (Rational(1) - Rational(BigInt(1) << n)) * exact::bernoulli(n);
            o.require(g.is_integer(), "G_n integral");
            o.require(g == Rational(exact::genocchi(n)), "G_n = 2(1-2^n) B_n");
        }
        o.require(exact::genocchi(8) == 17, "G_8 = 17");
        double worst = 0.0;
        for (const Complex s : {Complex{2.0, 0.0}, Complex{2.5, 0.0}, Complex{3.0, 0.0}, Complex{4.0, 0.0}, Complex{2.0, 1.0}}) {
            const Complex factor = 1.0 - std::pow(Complex{2.0, 0.0}, 1.0 - s);
            worst = std::max(worst, std::abs(numeric::eta_num(s).value - factor * numeric::zeta_num(s).value));
        }
        o.detail << " eta/zeta residual=" << worst;
        o.require(worst < 1e-10, "eta/zeta residual < 1e-10");
    });

    criterion(9, "accelerated u(1.1) uses fewer terms than partial sums", 60.0, [](Outcome& o) {
        const auto boole = bench::run_boole(bench::Series::U, 1.1, 8);
        const auto naive = bench::run_naive(bench::Series::U, 1.1, 8);
        o.detail << " boole=" << boole.terms << " naive=" << naive.terms << (naive.converged ? "" : " (capped)");
        o.require(boole.converged, "boole reached 8 digits");
        o.require(boole.terms < naive.terms, "boole terms < naive terms");
    });

    std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
    return failures == 0 ? 0 : 1;
}
