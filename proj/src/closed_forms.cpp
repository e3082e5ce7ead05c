#include "eulersums/closed_forms.hpp"

#include "eulersums/exact_numbers.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eulersums::closed {

using exact::bernoulli;
using exact::bernoulli_modified;
using exact::euler_zero;

double Log2Linear::to_double() const {
    return rational_part.to_double() + log2_coeff.to_double() * std::numbers::ln2;
}

Log2Linear& Log2Linear::operator+=(const Log2Linear& o) {
    rational_part += o.rational_part;
    log2_coeff += o.log2_coeff;
    return *this;
}

Log2Linear& Log2Linear::operator-=(const Log2Linear& o) {
    rational_part -= o.rational_part;
    log2_coeff -= o.log2_coeff;
    return *this;
}

Log2Linear& Log2Linear::operator*=(const Rational& k) {
    rational_part *= k;
    log2_coeff *= k;
    return *this;
}

namespace {

Rational rat(long v) { return Rational(v); }

// a (a-1) ... (a-k+1)
BigInt falling(long a, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a - static_cast<long>(i);
    return r;
}

// s (s+1) ... (s+k-1)
BigInt rising(long s, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= s + static_cast<long>(i);
    return r;
}

// eta at an integer argument <= 1.
Log2Linear eta_integer(long a) {
    if (a > 1) throw std::logic_error("eta_integer: argument > 1 has no exact value");
    return eta_at_one_minus(static_cast<unsigned>(1 - a));
}

class CTable {
public:
    std::vector<Rational> get(unsigned count) {
        std::lock_guard lock(mu_);
        for (auto n = static_cast<unsigned>(c_.size()) + 1; n <= count; ++n) {
            extend_factors(n);
            Rational sum(0);
            for (unsigned k = 1; k <= n; ++k) {
                if (log_coeffs_[k].is_zero() || gen_coeffs_[n - k].is_zero()) continue;
                sum += log_coeffs_[k] * gen_coeffs_[n - k];
            }
            c_.push_back(sum);
        }
        return {c_.begin(), c_.begin() + count};
    }

private:
    // gen_coeffs_[j] = E_j(1) / (2 j!), log_coeffs_[k] = B(k) / (k! k).
    void extend_factors(unsigned n) {
        while (gen_coeffs_.size() <= n) {
            const auto j = static_cast<unsigned>(gen_coeffs_.size());
            gen_coeffs_.push_back(exact::euler_eval(j, Rational(1)) / Rational(2 * factorial(j)));
        }
        if (log_coeffs_.empty()) log_coeffs_.emplace_back(0);
        while (log_coeffs_.size() <= n) {
            const auto k = static_cast<unsigned>(log_coeffs_.size());
            log_coeffs_.push_back(bernoulli_modified(k) / Rational(factorial(k) * k));
        }
    }

    std::mutex mu_;
    std::vector<Rational> c_;
    std::vector<Rational> gen_coeffs_;
    std::vector<Rational> log_coeffs_;
};

CTable& c_table() {
    static CTable table;
    return table;
}

Rational c_at(unsigned n) { return c_table().get(n).back(); }

}  // namespace

Rational zeta_nonpositive(unsigned k) {
    if (k == 0) return Rational(-1, 2);
    if (k % 2 == 0) return Rational(0);
    const unsigned two_n = k + 1;
    return -bernoulli(two_n) / rat(two_n);
}

Rational eta_nonpositive(unsigned k) {
    if (k == 0) return Rational(1, 2);
    if (k % 2 == 0) return Rational(0);
    const unsigned two_n = k + 1;
    return Rational(pow2(two_n) - 1) * bernoulli(two_n) / rat(two_n);
}

Log2Linear eta_at_one_minus(unsigned p) {
    if (p == 0) return Log2Linear::ln2();
    return Log2Linear(eta_nonpositive(p - 1));
}

Log2Linear u_value(unsigned m) {
    if (m == 0) return Log2Linear::ln2() * Rational(1, 2);
    if (m % 2 == 0) {
        // 2 u(-2n) = eta(1-2n) + n E_{2n-1}(0)
        const unsigned n = m / 2;
        const Rational twice = eta_nonpositive(2 * n - 1) + rat(n) * euler_zero(2 * n - 1);
        return Log2Linear(twice / rat(2));
    }
    // m = 2n - 1:
    // 2 u(1-2n) = eta(2-2n)
    //           + sum_{j=1}^{n} E_{2j-1}(0) (2n-1)(2n-2)...(2n-2j+1) / (2j-1)! * eta(2j+1-2n)
    // The eta(2-2n) term vanishes for n >= 2 and is eta(0) = 1/2 for n = 1.
    const unsigned n = (m + 1) / 2;
    Log2Linear twice = eta_at_one_minus(2 * n - 1);
    for (unsigned j = 1; j <= n; ++j) {
        const Rational coeff =
            euler_zero(2 * j - 1) * Rational(falling(2 * n - 1, 2 * j - 1)) / Rational(factorial(2 * j - 1));
        twice += coeff * eta_integer(static_cast<long>(2 * j + 1) - static_cast<long>(2 * n));
    }
    return twice * Rational(1, 2);
}

Rational v_value_even(unsigned n) {
    if (n == 0) throw std::domain_error("v_value_even: s = 0 is a pole of v");
    // 2 v(-2n) = zeta(1-2n) - n E_{2n-1}(0)
    return (zeta_nonpositive(2 * n - 1) - rat(n) * euler_zero(2 * n - 1)) / rat(2);
}

bool is_v_pole(long s) { return s == 0 || (s < 0 && (-s) % 2 == 1); }

PoleReport v_residue(long s) {
    if (!is_v_pole(s)) {
        throw std::domain_error("v_residue: s = " + std::to_string(s) + " is not a pole of v");
    }
    if (s == 0) return {0, Log2Linear(Rational(1, 2)), 1};
    // s = -2n-1: residue E_{2n+1}(0) / 2
    return {s, Log2Linear(euler_zero(static_cast<unsigned>(-s)) / rat(2)), 1};
}

Log2Linear w_value(unsigned m) {
    if (m == 0) {
        // w(0) = eta(1)/2 - eta(0)
        return Log2Linear::ln2() * Rational(1, 2) - Log2Linear(eta_nonpositive(0));
    }
    if (m % 2 == 0) {
        // w(-2n) = eta(1-2n)/2 - B_{2n} eta(0)
        return Log2Linear(eta_nonpositive(m - 1) / rat(2) - bernoulli(m) * eta_nonpositive(0));
    }
    // m = 2n - 1:
    // w(1-2n) = -eta(1-2n)/(2n) + eta(2-2n)/2
    //         - sum_{j=1}^{n} (2n-1)(2n-2)...(2n-2j+1) / (2j)! B_{2j} eta(2j+1-2n)
    // eta(2-2n)/2 is 1/4 for n = 1 and zero afterwards.
    const unsigned n = (m + 1) / 2;
    Log2Linear w = Log2Linear(-eta_nonpositive(m) / rat(2 * n)) + eta_at_one_minus(m) * Rational(1, 2);
    for (unsigned j = 1; j <= n; ++j) {
        const Rational coeff = Rational(falling(2 * n - 1, 2 * j - 1)) * bernoulli(2 * j) / Rational(factorial(2 * j));
        w -= coeff * eta_integer(static_cast<long>(2 * j + 1) - static_cast<long>(2 * n));
    }
    return w;
}

PoleReport w_pole() { return {1, Log2Linear::ln2(), 1}; }

std::vector<Rational> c_coefficients(unsigned count) {
    if (count == 0) throw std::invalid_argument("c_coefficients: count must be positive");
    return c_table().get(count);
}

VerificationRecord check_corollary1(unsigned n) {
    if (n == 0) throw std::invalid_argument("check_corollary1: n must be positive");
    VerificationRecord rec;
    rec.name = "corollary1";
    rec.index = n;
    rec.lhs = Rational(factorial(2 * n)) * c_at(2 * n);
    rec.rhs = (Rational(1, 4 * static_cast<long>(n)) + Rational(pow2(2 * n - 1)) - Rational(1, 2)) * bernoulli(2 * n);
    rec.passed = rec.lhs == rec.rhs;
    return rec;
}

VerificationRecord check_bridge(unsigned n) {
    if (n == 0) throw std::invalid_argument("check_bridge: n must be positive");
    VerificationRecord rec;
    rec.name = "bridge";
    rec.index = n;
    rec.lhs = Rational(factorial(2 * n)) * c_at(2 * n);
    rec.rhs = v_value_even(n) - zeta_nonpositive(2 * n - 1);
    rec.passed = rec.lhs == rec.rhs;
    return rec;
}

Rational g_exact_neg_even(unsigned n) {
    const auto rec = check_bridge(n);
    if (!rec.passed) {
        throw std::logic_error("g_exact_neg_even: routes disagree at n = " + std::to_string(n));
    }
    return rec.lhs;
}

namespace detail {

Log2Linear u_value_by_representation(unsigned m) {
    const long s = -static_cast<long>(m);
    // 2u(s) = eta(s+1) - sum_j (s)_{2j+1}/(2j+1)! E_{2j+1}(0) eta(s+2j+2); the
    // remainder carries (s)_{2q}, which vanishes once 2q > m.
    Log2Linear twice = eta_integer(s + 1);
    for (unsigned j = 0; 2 * j + 1 <= m; ++j) {
        const BigInt poch = rising(s, 2 * j + 1);
        if (poch == 0) continue;
        const Rational coeff = Rational(poch) / Rational(factorial(2 * j + 1)) * euler_zero(2 * j + 1);
        twice -= coeff * eta_integer(s + 2 * static_cast<long>(j) + 2);
    }
    return twice * Rational(1, 2);
}

Log2Linear w_value_by_representation(unsigned m) {
    const long s = -static_cast<long>(m);
    // w(s) = eta(s)/(s-1) + eta(s+1)/2 + sum_j (s)_{2j-1}/(2j)! B_{2j} eta(s+2j)
    Log2Linear w = eta_integer(s) * Rational(1, s - 1) + eta_integer(s + 1) * Rational(1, 2);
    for (unsigned j = 1; 2 * j - 1 <= m + 1; ++j) {
        const BigInt poch = rising(s, 2 * j - 1);
        if (poch == 0) continue;
        const Rational coeff = Rational(poch) / Rational(factorial(2 * j)) * bernoulli(2 * j);
        w += coeff * eta_integer(s + 2 * static_cast<long>(j));
    }
    return w;
}

Rational u_even_closed_form(unsigned n) {
    return Rational(pow2(2 * n) - 1) * Rational(1 - 2 * static_cast<long>(n)) * bernoulli(2 * n) /
           Rational(4 * static_cast<long>(n));
}

}  // namespace detail

}  // namespace eulersums::closed
