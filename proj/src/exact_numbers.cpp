#include "eulersums/exact_numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace eulersums::exact {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double RationalPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return RationalPolynomial(std::move(d));
}

namespace {

// Each table extends itself under its own lock; entries never change once
// written, so returning copies keeps callers isolated from later growth.

class BernoulliTable {
public:
    Rational get(unsigned n) {
        std::lock_guard lock(mu_);
        extend(n);
        return values_[n];
    }

private:
    void extend(unsigned n) {
        if (values_.empty()) values_.emplace_back(1);
        for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
            if (m >= 3 && m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            // sum_{k=0}^{m} C(m+1, k) B_k = 0
            Rational sum(0);
            for (unsigned k = 0; k < m; ++k) {
                if (values_[k].is_zero()) continue;
                sum += Rational(binomial(m + 1, k)) * values_[k];
            }
            values_.push_back(-sum / Rational(static_cast<long>(m) + 1));
        }
    }

    std::mutex mu_;
    std::vector<Rational> values_;
};

class EulerPolynomialTable {
public:
    RationalPolynomial get(unsigned n) {
        std::lock_guard lock(mu_);
        if (polys_.empty()) polys_.emplace_back(std::vector<Rational>{Rational(1)});
        for (auto m = static_cast<unsigned>(polys_.size()); m <= n; ++m) {
            // E_m' = m E_{m-1}; integrate term by term, then seed E_m(0).
            const auto& prev = polys_.back().coefficients();
            std::vector<Rational> next(prev.size() + 1);
            next[0] = euler_zero(m);
            for (std::size_t i = 0; i < prev.size(); ++i) {
                next[i + 1] = prev[i] * Rational(static_cast<long>(m)) / Rational(static_cast<long>(i) + 1);
            }
            polys_.emplace_back(std::move(next));
        }
        return polys_[n];
    }

private:
    std::mutex mu_;
    std::vector<RationalPolynomial> polys_;
};

class EulerZeroGfTable {
public:
    Rational get(unsigned n) {
        std::lock_guard lock(mu_);
        if (values_.empty()) values_.emplace_back(1);
        for (auto m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
            Rational sum(0);
            for (unsigned j = 0; j < m; ++j) {
                if (values_[j].is_zero()) continue;
                sum += Rational(binomial(m, j)) * values_[j];
            }
            values_.push_back(-sum / Rational(2));
        }
        return values_[n];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

EulerPolynomialTable& euler_table() {
    static EulerPolynomialTable table;
    return table;
}

EulerZeroGfTable& euler_zero_gf_table() {
    static EulerZeroGfTable table;
    return table;
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_table().get(n); }

Rational bernoulli_modified(unsigned n) { return n == 1 ? Rational(1, 2) : bernoulli(n); }

Rational euler_zero(unsigned n) {
    const Rational factor = Rational(2) * (Rational(1) - Rational(pow2(n + 1)));
    return factor * bernoulli(n + 1) / Rational(static_cast<long>(n) + 1);
}

RationalPolynomial euler_polynomial(unsigned n) { return euler_table().get(n); }

Rational euler_eval(unsigned n, const Rational& x) { return euler_polynomial(n)(x); }

BigInt genocchi(unsigned n) {
    if (n == 0) return 0;
    const Rational via_bernoulli = Rational(2) * (Rational(1) - Rational(pow2(n))) * bernoulli(n);
    const Rational via_euler = Rational(static_cast<long>(n)) * detail::euler_zero_by_generating_function(n - 1);
    if (via_bernoulli != via_euler) {
        throw std::logic_error("genocchi(" + std::to_string(n) + "): routes disagree: " + via_bernoulli.to_string() +
                               " vs " + via_euler.to_string());
    }
    if (!via_bernoulli.is_integer()) {
        throw std::logic_error("genocchi(" + std::to_string(n) + "): non-integral value " + via_bernoulli.to_string());
    }
    return via_bernoulli.numerator();
}

namespace detail {
Rational euler_zero_by_generating_function(unsigned n) { return euler_zero_gf_table().get(n); }
}  // namespace detail

}  // namespace eulersums::exact
