#include "faulhaber/powersum.hpp"

#include <stdexcept>

namespace faulhaber {

namespace {

// All closed forms produce Rational intermediates; integrality is asserted
// here instead of assumed, so a formula bug fails loudly.
BigInt require_integer(const Rational& r, const char* where) {
    if (!r.is_integer())
        throw std::logic_error(std::string(where) + ": non-integral result " + r.to_string());
    return r.to_integer();
}

}  // namespace

Rational SumPolynomial::evaluate(const BigInt& n) const {
    Rational acc;
    for (std::size_t d = coefficients.size(); d-- > 0;)
        acc = acc * Rational(n) + coefficients[d];
    return acc;
}

BigInt powersum_bruteforce(const PowerSumQuery& q) {
    BigInt total = 0;
    BigInt term;
    for (std::uint64_t k = 1; k <= q.n; ++k) {
        mpz_ui_pow_ui(term.get_mpz_t(), k, q.p);
        total += term;
    }
    return total;
}

BigInt powersum_bernoulli_minus(const PowerSumQuery& q) {
    if (q.p == 0) return BigInt(q.n);
    const BigInt n(q.n);
    Rational acc;
    for (std::uint64_t k = 0; k <= q.p; ++k)
        acc += Rational(binomial(q.p + 1, k) * ipow(n, q.p - k + 1)) * bernoulli_number(k);
    acc /= Rational(BigInt(q.p) + 1);
    acc += Rational(ipow(n, q.p));
    return require_integer(acc, "powersum_bernoulli_minus");
}

BigInt powersum_bernoulli_plus(const PowerSumQuery& q) {
    if (q.p == 0) return BigInt(q.n);
    const BigInt n(q.n);
    Rational acc;
    for (std::uint64_t k = 0; k <= q.p; ++k)
        acc += Rational(binomial(q.p + 1, k) * ipow(n, q.p - k + 1)) *
               bernoulli_number(k, Convention::plus);
    acc /= Rational(BigInt(q.p) + 1);
    return require_integer(acc, "powersum_bernoulli_plus");
}

BigInt powersum_alternating(const PowerSumQuery& q) {
    if (q.p == 0) return BigInt(q.n);
    const BigInt n(q.n);
    Rational acc;
    for (std::uint64_t k = 0; k <= q.p; ++k) {
        Rational term = Rational(binomial(q.p + 1, k) * ipow(n, q.p - k + 1)) *
                        bernoulli_number(k);
        acc += (k % 2 == 0) ? term : -term;
    }
    acc /= Rational(BigInt(q.p) + 1);
    return require_integer(acc, "powersum_alternating");
}

BigInt powersum_parity(const PowerSumQuery& q, Convention conv) {
    if (q.p == 0)
        throw std::domain_error("powersum_parity: requires p >= 1");
    const BigInt np1(q.n + 1);
    Rational acc;
    if (q.p % 2 == 0) {
        for (std::uint64_t k = 0; k <= q.p / 2; ++k)
            acc += Rational(binomial(q.p + 1, 2 * k + 1) * ipow(np1, 2 * k + 1)) *
                   bernoulli_number(q.p - 2 * k, conv);
    } else {
        for (std::uint64_t k = 1; k <= (q.p + 1) / 2; ++k)
            acc += Rational(binomial(q.p + 1, 2 * k) * ipow(np1, 2 * k)) *
                   bernoulli_number(q.p - 2 * k + 1, conv);
    }
    acc /= Rational(BigInt(q.p) + 1);
    acc -= Rational(ipow(np1, q.p), BigInt(2));
    return require_integer(acc, "powersum_parity");
}

BigInt powersum_via_poly(const PowerSumQuery& q) {
    if (q.p == 0)
        throw std::domain_error("powersum_via_poly: requires p >= 1");
    const Rational diff = bernoulli_polynomial(q.p + 1, Rational(BigInt(q.n + 1))) -
                          bernoulli_number(q.p + 1);
    return require_integer(diff / Rational(BigInt(q.p) + 1), "powersum_via_poly");
}

BigInt powersum_recursive(const PowerSumQuery& q) {
    const BigInt np1(q.n + 1);
    std::vector<BigInt> sums;
    sums.reserve(q.p + 1);
    sums.push_back(BigInt(q.n));  // S_0(n) = n
    for (std::uint64_t r = 1; r <= q.p; ++r) {
        Rational acc = Rational(ipow(np1, r + 1)) - 1;
        for (std::uint64_t j = 0; j < r; ++j)
            acc -= Rational(binomial(r + 1, j) * sums[j]);
        acc /= Rational(BigInt(r) + 1);
        sums.push_back(require_integer(acc, "powersum_recursive"));
    }
    return sums[q.p];
}

SumPolynomial powersum_polynomial(std::uint64_t p, Convention conv) {
    SumPolynomial poly;
    poly.coefficients.assign(p + 2, Rational());
    const Rational inv_p1 = Rational(1) / Rational(BigInt(p) + 1);
    for (std::uint64_t k = 0; k <= p; ++k)
        poly.coefficients[p - k + 1] += Rational(binomial(p + 1, k)) *
                                        bernoulli_number(k, conv) * inv_p1;
    if (conv == Convention::minus && p >= 1)
        poly.coefficients[p] += 1;  // the trailing n^p term of the minus form
    return poly;
}

}  // namespace faulhaber
