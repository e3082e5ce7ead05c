#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersums/closed_forms.hpp"
#include "eulersums/exact_numbers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace eulersums;
using namespace eulersums::closed;

namespace {

Log2Linear ll(Rational a, Rational b) { return Log2Linear(std::move(a), std::move(b)); }

// C_n = (1/2) sum_{k>=1} E_{n-k}(1)/(n-k)! * B(k)/(k! k), with E_j(1)
// taken from the generating-function route for E_j(0).
Rational c_by_double_sum(unsigned n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) {
        const unsigned j = n - k;
        const Rational e1 = j == 0 ? Rational(1) : -exact::detail::euler_zero_by_generating_function(j);
        acc += e1 / Rational(factorial(j)) * exact::bernoulli_modified(k) /
               (Rational(factorial(k)) * Rational(static_cast<long>(k)));
    }
    return acc / Rational(2);
}

}  // namespace

TEST_CASE("zeta and eta at non-positive integers") {
    CHECK(zeta_nonpositive(0) == Rational(-1, 2));
    CHECK(zeta_nonpositive(1) == Rational(-1, 12));
    CHECK(zeta_nonpositive(2).is_zero());
    CHECK(zeta_nonpositive(3) == Rational(1, 120));
    CHECK(eta_nonpositive(0) == Rational(1, 2));
    CHECK(eta_nonpositive(1) == Rational(1, 4));
    CHECK(eta_nonpositive(4).is_zero());
    for (unsigned k = 0; k <= 200; ++k) {
        CHECK(eta_nonpositive(k) == (Rational(1) - Rational(pow2(k + 1))) * zeta_nonpositive(k));
    }
    CHECK(eta_at_one_minus(0) == Log2Linear::ln2());
    CHECK(eta_at_one_minus(2) == Log2Linear(Rational(1, 4)));
}

TEST_CASE("Log2Linear") {
    const Log2Linear a = ll(Rational(1, 4), Rational(-1, 4));
    CHECK(a.to_double() == doctest::Approx(0.25 - 0.25 * std::numbers::ln2));
    CHECK_FALSE(a.is_rational());
    CHECK((a + a) == a * Rational(2));
    CHECK((a - a).is_rational());
    CHECK(Log2Linear(Rational(3)).is_rational());
}

TEST_CASE("u values") {
    CHECK(u_value(0) == ll(Rational(0), Rational(1, 2)));
    CHECK(u_value(1) == ll(Rational(1, 4), Rational(-1, 4)));
    CHECK(u_value(2) == ll(Rational(-1, 8), Rational(0)));
    CHECK(u_value(3) == ll(Rational(-3, 16), Rational(1, 8)));
}

TEST_CASE("u(-2n): grouped formula and closed form agree") {
    for (unsigned n = 1; n <= 100; ++n) {
        const auto u = u_value(2 * n);
        CHECK(u.log2_coeff.is_zero());
        CHECK(u.rational_part == detail::u_even_closed_form(n));
    }
}

TEST_CASE("u and w closed forms against the term-by-term representations") {
    for (unsigned m = 0; m <= 40; ++m) {
        CHECK_MESSAGE(u_value(m) == detail::u_value_by_representation(m), "m = " << m);
        CHECK_MESSAGE(w_value(m) == detail::w_value_by_representation(m), "m = " << m);
    }
}

TEST_CASE("v(-2n)") {
    CHECK(v_value_even(1) == Rational(5, 24));
    CHECK(v_value_even(2) == Rational(-59, 240));
    // (zeta(-5) - 3 E_5(0))/2 = (-1/252 + 3/2)/2
    CHECK(v_value_even(3) == Rational(377, 504));
    CHECK_THROWS_AS(v_value_even(0), std::domain_error);
}

TEST_CASE("v residues") {
    CHECK(v_residue(0).residue == Log2Linear(Rational(1, 2)));
    CHECK(v_residue(-1).residue == Log2Linear(Rational(-1, 4)));
    CHECK(v_residue(-3).residue == Log2Linear(Rational(1, 8)));
    CHECK(v_residue(-3).order == 1);
    CHECK(v_residue(-5).location == -5);
    CHECK(is_v_pole(0));
    CHECK(is_v_pole(-7));
    CHECK_FALSE(is_v_pole(-2));
    CHECK_FALSE(is_v_pole(1));
    CHECK_THROWS_AS(v_residue(-2), std::domain_error);
    CHECK_THROWS_AS(v_residue(2), std::domain_error);
}

TEST_CASE("w values and pole") {
    CHECK(w_value(0) == ll(Rational(-1, 2), Rational(1, 2)));
    CHECK(w_value(1) == ll(Rational(1, 8), Rational(-1, 12)));
    CHECK(w_value(2) == ll(Rational(1, 24), Rational(0)));
    for (unsigned n = 1; n <= 100; ++n) CHECK(w_value(2 * n).log2_coeff.is_zero());
    const auto p = w_pole();
    CHECK(p.location == 1);
    CHECK(p.order == 1);
    CHECK(p.residue == Log2Linear::ln2());
}

TEST_CASE("C_n") {
    const auto c = c_coefficients(3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1, 4));
    CHECK(c[1] == Rational(7, 48));
    CHECK(c[2] == Rational(1, 96));
}

TEST_CASE("C_n: Cauchy product against the double sum") {
    const auto c = c_coefficients(60);
    for (unsigned n = 1; n <= 60; ++n) CHECK_MESSAGE(c[n - 1] == c_by_double_sum(n), "n = " << n);
}

TEST_CASE("convolution and bridge identities") {
    const auto first = check_corollary1(1);
    CHECK(first.passed);
    CHECK(first.lhs == Rational(7, 24));
    CHECK(first.rhs == Rational(7, 24));
    const auto bridge = check_bridge(1);
    CHECK(bridge.passed);
    CHECK(bridge.rhs == Rational(5, 24) - Rational(-1, 12));
    for (unsigned n = 1; n <= 80; ++n) {
        CHECK(check_corollary1(n).passed);
        CHECK(check_bridge(n).passed);
    }
}

TEST_CASE("G at negative even integers") {
    CHECK(g_exact_neg_even(1) == Rational(7, 24));
    CHECK(g_exact_neg_even(2) == Rational(-61, 240));
    for (unsigned n = 1; n <= 60; ++n) {
        CHECK(g_exact_neg_even(n) == v_value_even(n) - zeta_nonpositive(2 * n - 1));
    }
}
