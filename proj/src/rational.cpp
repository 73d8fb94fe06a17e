#include "faulhaber/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace faulhaber {

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

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_double(double value) {
    Rational r;
    r.q_ = mpq_class(value);  // exact: binary mantissa times power of two
    return r;
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::logic_error("Rational: " + to_string() + " is not an integer");
    return q_.get_num();
}

std::string Rational::to_string() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
}

Rational Rational::pow(unsigned long exp) const {
    // Powers of a canonical fraction stay canonical.
    return Rational(ipow(numerator(), exp), ipow(denominator(), exp));
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace faulhaber
