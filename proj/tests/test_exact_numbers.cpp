#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersums/exact_numbers.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

using namespace eulersums;
using namespace eulersums::exact;

namespace {

// Akiyama-Tanigawa produces B_n with B_1 = +1/2; independent of the library's recurrence.
std::vector<Rational> akiyama_tanigawa(unsigned count) {
    std::vector<Rational> out;
    std::vector<Rational> a(count + 1);
    for (unsigned m = 0; m <= count; ++m) {
        a[m] = Rational(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    return out;
}

// E_n(x) coefficients by expanding 2 e^{xt}/(e^t + 1) as a power series:
// with 2/(e^t+1) = sum c_k t^k, E_n(x)/n! = sum_k c_k x^{n-k}/(n-k)!.
std::vector<Rational> euler_series_coefficients(unsigned count) {
    // (e^t + 1) sum c_k t^k = 2 gives 2 c_n + sum_{j>=1} c_{n-j}/j! = 2 [n == 0]
    std::vector<Rational> c(count + 1);
    for (unsigned n = 0; n <= count; ++n) {
        Rational acc = n == 0 ? Rational(2) : Rational(0);
        for (unsigned j = 1; j <= n; ++j) acc -= c[n - j] / Rational(factorial(j));
        c[n] = acc / Rational(2);
    }
    return c;
}

RationalPolynomial euler_by_series(unsigned n, const std::vector<Rational>& c) {
    std::vector<Rational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        coeffs[n - k] = c[k] * Rational(factorial(n)) / Rational(factorial(n - k));
    }
    return RationalPolynomial(coeffs);
}

}  // namespace

TEST_CASE("bernoulli known values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli against Akiyama-Tanigawa") {
    const auto oracle = akiyama_tanigawa(120);
    for (unsigned n = 0; n <= 120; ++n) {
        const Rational expected = n == 1 ? -oracle[1] : oracle[n];
        CHECK_MESSAGE(bernoulli(n) == expected, "n = " << n);
    }
}

TEST_CASE("odd bernoulli numbers vanish") {
    for (unsigned n = 3; n <= 301; n += 2) CHECK(bernoulli(n).is_zero());
}

TEST_CASE("bernoulli_modified") {
    CHECK(bernoulli_modified(0) == Rational(1));
    CHECK(bernoulli_modified(1) == Rational(1, 2));
    CHECK(bernoulli_modified(2) == Rational(1, 6));
    for (unsigned n = 2; n <= 40; ++n) CHECK(bernoulli_modified(n) == bernoulli(n));
}

TEST_CASE("euler polynomials: explicit low degrees") {
    CHECK(euler_polynomial(0) == RationalPolynomial({Rational(1)}));
    CHECK(euler_polynomial(1) == RationalPolynomial({Rational(-1, 2), Rational(1)}));
    CHECK(euler_polynomial(2) == RationalPolynomial({Rational(0), Rational(-1), Rational(1)}));
    CHECK(euler_polynomial(3) == RationalPolynomial({Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)}));
}

TEST_CASE("euler polynomials against the generating-function series") {
    const auto c = euler_series_coefficients(80);
    for (unsigned n = 0; n <= 80; ++n) CHECK_MESSAGE(euler_polynomial(n) == euler_by_series(n, c), "n = " << n);
}

TEST_CASE("euler_eval examples") {
    CHECK(euler_eval(1, Rational(1, 2)).is_zero());
    CHECK(euler_eval(3, Rational(0)) == Rational(1, 4));
    CHECK(euler_eval(2, Rational(1)).is_zero());
    CHECK(euler_polynomial(3)(0.5) == doctest::Approx(0.0));
}

TEST_CASE("euler_zero") {
    CHECK(euler_zero(1) == Rational(-1, 2));
    CHECK(euler_zero(2).is_zero());
    CHECK(euler_zero(5) == Rational(-1, 2));
    for (unsigned n = 1; n <= 200; ++n) CHECK(euler_zero(2 * n).is_zero());
    for (unsigned n = 0; n <= 100; ++n) {
        CHECK(euler_polynomial(n).coefficient(0) == euler_zero(n));
        CHECK(detail::euler_zero_by_generating_function(n) == euler_zero(n));
    }
}

TEST_CASE("E_n(1) = -E_n(0)") {
    for (unsigned n = 1; n <= 100; ++n) CHECK(euler_eval(n, Rational(1)) == -euler_zero(n));
}

TEST_CASE("E_n(t+1) + E_n(t) = 2 t^n") {
    const std::vector<Rational> points{Rational(0), Rational(1, 2), Rational(1), Rational(-1), Rational(3, 7)};
    for (unsigned n = 0; n <= 50; ++n) {
        for (const auto& t : points) {
            Rational power(1);
            for (unsigned k = 0; k < n; ++k) power *= t;
            CHECK(euler_eval(n, t + Rational(1)) + euler_eval(n, t) == Rational(2) * power);
        }
    }
}

TEST_CASE("Appell property") {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto previous = euler_polynomial(n - 1);
        std::vector<Rational> scaled;
        for (const auto& c : previous.coefficients()) scaled.push_back(c * Rational(static_cast<long>(n)));
        CHECK(euler_polynomial(n).derivative() == RationalPolynomial(scaled));
    }
}

TEST_CASE("genocchi") {
    CHECK(genocchi(0) == 0);
    CHECK(genocchi(1) == 1);
    CHECK(genocchi(6) == -3);
    CHECK(genocchi(8) == 17);
    for (unsigned n = 0; n <= 200; ++n) {
        const BigInt g = genocchi(n);
        if (n >= 3 && n % 2 == 1) CHECK(g == 0);
    }
    // OEIS A036968: 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073 from n = 1
    CHECK(genocchi(10) == -155);
    CHECK(genocchi(12) == 2073);
}

TEST_CASE("rational polynomial basics") {
    const RationalPolynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(RationalPolynomial().is_zero());
    CHECK(RationalPolynomial({Rational(0)}).is_zero());
    CHECK(RationalPolynomial().derivative().is_zero());
}

TEST_CASE("concurrent callers see identical tables") {
    std::vector<Rational> results(4);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { results[i] = bernoulli(150) + euler_zero(149); });
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == results[0]);
}
