#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace faulhaber {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Exact n!.
BigInt factorial(unsigned long n);

/// Exact base^exp for a nonnegative integer exponent.
BigInt ipow(const BigInt& base, unsigned long exp);

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. All arithmetic is exact; nothing here ever rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // implicit: integers are rationals
    Rational(const BigInt& value) : q_(value) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Exact conversion; every finite double is a dyadic rational.
    static Rational from_double(double value);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// The exact integer value; throws std::logic_error unless denominator == 1.
    BigInt to_integer() const;

    double to_double() const { return q_.get_d(); }

    /// "num/den", with "/den" omitted for integral values.
    std::string to_string() const;

    /// Exact power with nonnegative integer exponent.
    Rational pow(unsigned long exp) const;

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.q_ == rhs.q_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.q_, rhs.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;  // canonical: gcd(|num|, den) = 1, den >= 1
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace faulhaber
