#pragma once

// Exact values of u, v, w at the non-positive integers, their poles and
// residues, the rational values of zeta and eta there, and the convolution
// coefficients C_n together with the identities that tie them to v(-2n).
//
//   u(s) = sum (-1)^{n-1} H_n  / n^s
//   v(s) = sum (-1)^{n-1} H_n^- / n^s
//   w(s) = sum            H_n^- / n^s
//
// Every value here lies in Q + Q ln 2, since ln 2 only ever enters as eta(1).

#include "eulersums/rational.hpp"

#include <string>
#include <vector>

namespace eulersums::closed {

/// a + b ln 2 with exact a, b.
struct Log2Linear {
    Rational rational_part;
    Rational log2_coeff;

    Log2Linear() = default;
    Log2Linear(Rational a) : rational_part(std::move(a)) {}  // NOLINT: Q embeds into Q + Q ln 2
    Log2Linear(Rational a, Rational b) : rational_part(std::move(a)), log2_coeff(std::move(b)) {}

    static Log2Linear ln2() { return {Rational(0), Rational(1)}; }

    bool is_rational() const { return log2_coeff.is_zero(); }
    double to_double() const;

    Log2Linear& operator+=(const Log2Linear& o);
    Log2Linear& operator-=(const Log2Linear& o);
    Log2Linear& operator*=(const Rational& k);

    friend Log2Linear operator+(Log2Linear a, const Log2Linear& b) { return a += b; }
    friend Log2Linear operator-(Log2Linear a, const Log2Linear& b) { return a -= b; }
    friend Log2Linear operator*(Log2Linear a, const Rational& k) { return a *= k; }
    friend Log2Linear operator*(const Rational& k, Log2Linear a) { return a *= k; }
    friend bool operator==(const Log2Linear&, const Log2Linear&) = default;
};

/// Residue is stored as Log2Linear so that the pole of w at s = 1 (residue
/// ln 2) and the rational residues of v share one type.
struct PoleReport {
    long location = 0;
    Log2Linear residue;
    int order = 1;
};

/// Outcome of an exact identity check. A failed check is a value, not an error.
struct VerificationRecord {
    std::string name;
    long index = 0;
    bool passed = false;
    Rational lhs;
    Rational rhs;
};

/// zeta(-k), k >= 0.
Rational zeta_nonpositive(unsigned k);
/// eta(-k), k >= 0.
Rational eta_nonpositive(unsigned k);
/// eta(1 - p) for p >= 0: eta(1) = ln 2, otherwise rational.
Log2Linear eta_at_one_minus(unsigned p);

/// u(-m).
Log2Linear u_value(unsigned m);

/// v(-2n), n >= 1. Throws std::domain_error for n == 0 (pole at s = 0).
Rational v_value_even(unsigned n);

/// True when s is a pole of v: s = 0 or s a negative odd integer.
bool is_v_pole(long s);
/// Pole data for v at s in {0, -1, -3, ...}; throws std::domain_error elsewhere.
PoleReport v_residue(long s);

/// w(-m).
Log2Linear w_value(unsigned m);
/// The simple pole of w at s = 1.
PoleReport w_pole();

/// C_1..C_N from the Cauchy product of e^z/(e^z+1) and log((e^z - 1)/z).
std::vector<Rational> c_coefficients(unsigned count);

/// (2n)! C_{2n} == (1/(4n) + 2^{2n-1} - 1/2) B_{2n}.
VerificationRecord check_corollary1(unsigned n);
/// (2n)! C_{2n} == v(-2n) - zeta(1-2n).
VerificationRecord check_bridge(unsigned n);

/// G(-2n) = (2n)! C_{2n}, cross-checked against v(-2n) - zeta(1-2n);
/// throws std::logic_error if the two disagree.
Rational g_exact_neg_even(unsigned n);

namespace detail {
/// Exact evaluation of the Euler-Boole representation of u at s = -m, with
/// every term written out; independent of the grouped closed forms.
Log2Linear u_value_by_representation(unsigned m);
/// Same for the Euler-Maclaurin representation of w at s = -m.
Log2Linear w_value_by_representation(unsigned m);
/// The direct closed form (2^{2n} - 1)(1 - 2n) B_{2n} / (4n) for u(-2n).
Rational u_even_closed_form(unsigned n);
}  // namespace detail

}  // namespace eulersums::closed
