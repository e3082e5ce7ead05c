#pragma once

// Bernoulli numbers, Euler polynomials and Genocchi numbers over exact
// rationals. All functions are pure; the memo tables behind them are
// process-wide, grow on demand and are guarded by a mutex.
//
// Sign convention: B_1 = -1/2. The "modified" sequence B(n) used by the
// convolution coefficients flips it to B(1) = +1/2, i.e. the coefficients of
// z e^z / (e^z - 1).

#include "eulersums/rational.hpp"

#include <vector>

namespace eulersums::exact {

/// Dense polynomial with exact coefficients; index i holds the x^i term.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    /// Degree of the polynomial; the zero polynomial reports 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    RationalPolynomial derivative() const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;  // no trailing zeros
};

Rational bernoulli(unsigned n);
Rational bernoulli_modified(unsigned n);

/// E_n(x), built by integrating n E_{n-1}(x) and fixing the constant term
/// from the Bernoulli closed form for E_n(0).
RationalPolynomial euler_polynomial(unsigned n);
Rational euler_eval(unsigned n, const Rational& x);

/// E_n(0) = 2 (1 - 2^{n+1}) B_{n+1} / (n + 1).
Rational euler_zero(unsigned n);

/// G_n = 2 (1 - 2^n) B_n, cross-checked against n E_{n-1}(0) computed from
/// the generating function 2/(e^t + 1). G_0 = 0. Throws std::logic_error if
/// the two routes disagree or the value is not an integer.
BigInt genocchi(unsigned n);

namespace detail {
/// E_n(0) from the recurrence sum_{j<=n} C(n,j) E_j(0) + E_n(0) = 2 [n == 0],
/// which does not touch the Bernoulli table.
Rational euler_zero_by_generating_function(unsigned n);
}  // namespace detail

}  // namespace eulersums::exact
