#include "eulersums/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eulersums {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

namespace {

bool is_signed_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

BigInt to_bigint(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_signed_integer(num)) {
        throw std::invalid_argument("Rational::parse: bad numerator in '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(to_bigint(num));
    }
    const auto den = text.substr(slash + 1);
    if (!is_signed_integer(den)) {
        throw std::invalid_argument("Rational::parse: bad denominator in '" + std::string(text) + "'");
    }
    return Rational(to_bigint(num), to_bigint(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace eulersums
