#include "faulhaber/bernoulli.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace faulhaber {

std::string to_string(Convention conv) {
    return conv == Convention::minus ? "minus" : "plus";
}

double PiPower::to_double() const {
    return coefficient.to_double() * std::pow(std::numbers::pi, static_cast<double>(pi_exponent));
}

std::string PiPower::to_string() const {
    if (pi_exponent == 0) return coefficient.to_string();
    return coefficient.to_string() + " * pi^" + std::to_string(pi_exponent);
}

Rational BernoulliCache::at(std::size_t k, Convention conv) {
    if (k == 1 && conv == Convention::plus) return Rational(1, 2);
    {
        std::shared_lock lock(mutex_);
        if (k < values_.size()) return values_[k];
    }
    ensure(k);
    std::shared_lock lock(mutex_);
    return values_[k];
}

void BernoulliCache::ensure(std::size_t max_index) {
    std::unique_lock lock(mutex_);
    while (values_.size() <= max_index) {
        // Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
        const std::size_t m = values_.size();
        Rational acc;
        for (std::size_t j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * values_[j];
        values_.push_back(-(acc / Rational(static_cast<long>(m) + 1)));
    }
}

std::size_t BernoulliCache::max_index() const {
    std::shared_lock lock(mutex_);
    return values_.size() - 1;
}

BernoulliCache& BernoulliCache::shared() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(std::size_t k, Convention conv) {
    return BernoulliCache::shared().at(k, conv);
}

Rational bernoulli_polynomial(std::size_t m, const Rational& x, Convention conv) {
    // Horner over the descending-degree coefficients C(m,k) B_k.
    Rational acc = bernoulli_number(0, conv);
    for (std::size_t k = 1; k <= m; ++k)
        acc = acc * x + Rational(binomial(m, k)) * bernoulli_number(k, conv);
    return acc;
}

Rational zeta_neg_int(std::size_t p) {
    if (p == 0) return Rational(-1, 2);
    return -(bernoulli_number(p + 1) / Rational(static_cast<long>(p) + 1));
}

PiPower zeta_even_exact(std::size_t two_rho) {
    if (two_rho == 0 || two_rho % 2 != 0)
        throw std::domain_error("zeta_even_exact: argument must be a positive even integer");
    const std::size_t k = two_rho / 2;
    const long sign = (k % 2 == 1) ? 1 : -1;  // (-1)^(k+1)
    Rational coeff = Rational(sign * ipow(BigInt(2), two_rho),
                              BigInt(2) * factorial(two_rho)) *
                     bernoulli_number(two_rho);
    return PiPower{coeff, two_rho};
}

}  // namespace faulhaber
