#pragma once

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/rational.hpp"

#include <cstdint>
#include <vector>

namespace faulhaber {

/// A power-sum instance: S_p(n) = sum_{k=1..n} k^p. n = 0 is the empty
/// sum and yields 0 on every evaluation path.
struct PowerSumQuery {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
};

/// S_p as a polynomial in n: coefficients[d] is the coefficient of n^d,
/// degree exactly p+1, leading coefficient 1/(p+1), constant term 0.
struct SumPolynomial {
    std::vector<Rational> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
    Rational evaluate(const BigInt& n) const;
};

/// Direct big-integer summation; the ground-truth oracle for every
/// closed form below.
BigInt powersum_bruteforce(const PowerSumQuery& q);

/// S_p(n) = (1/(p+1)) sum_k C(p+1,k) n^(p-k+1) B_k + n^p with B_1 = -1/2.
BigInt powersum_bernoulli_minus(const PowerSumQuery& q);

/// S_p(n) = (1/(p+1)) sum_k C(p+1,k) B_k n^(p-k+1) with B_1 = +1/2.
BigInt powersum_bernoulli_plus(const PowerSumQuery& q);

/// S_p(n) = (1/(p+1)) sum_k (-1)^k C(p+1,k) n^(p-k+1) B_k with B_1 = -1/2.
BigInt powersum_alternating(const PowerSumQuery& q);

/// Even/odd-p closed forms in powers of (n+1). Only even-index Bernoulli
/// numbers appear, so the result is identical under both conventions.
/// Rejects p = 0.
BigInt powersum_parity(const PowerSumQuery& q, Convention conv);

/// S_p(n) = (B_{p+1}(n+1) - B_{p+1}) / (p+1). Rejects p = 0.
BigInt powersum_via_poly(const PowerSumQuery& q);

/// Solves (1+n)^(p+1) = 1 + sum_{r=0..p} C(p+1,r) S_r(n) bottom-up,
/// memoizing S_0(n)..S_{p-1}(n) within the call.
BigInt powersum_recursive(const PowerSumQuery& q);

/// Coefficient view of S_p; evaluating it at integer n reproduces the
/// closed forms above. The convention only affects the internal route,
/// never the coefficients.
SumPolynomial powersum_polynomial(std::uint64_t p, Convention conv = Convention::minus);

}  // namespace faulhaber
