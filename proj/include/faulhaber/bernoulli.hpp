#pragma once

#include "faulhaber/rational.hpp"

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <vector>

namespace faulhaber {

/// Sign convention for the index-1 Bernoulli number. `minus` (B_1 = -1/2)
/// is the NIST convention and the default everywhere; `plus` (B_1 = +1/2)
/// is Bernoulli's original choice. No other index is affected.
enum class Convention { minus, plus };

std::string to_string(Convention conv);

/// coefficient * pi^pi_exponent, held exactly. pi_exponent is even and
/// may be zero, in which case the value is plain rational.
struct PiPower {
    Rational coefficient;
    unsigned long pi_exponent = 0;

    double to_double() const;
    std::string to_string() const;  // "c * pi^k", or just "c" when k == 0
};

/// Memoized table of Bernoulli numbers B_0..B_max as exact rationals.
/// Values are stored under the minus convention; `plus` is an index-1
/// override applied at read time. Concurrent reads are safe; extension is
/// serialized and never observable half-written.
class BernoulliCache {
public:
    Rational at(std::size_t k, Convention conv = Convention::minus);

    /// Grow the table so every index up to max_index is available.
    void ensure(std::size_t max_index);

    std::size_t max_index() const;

    /// Process-wide instance shared by the free functions below.
    static BernoulliCache& shared();

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_{Rational(1)};  // minus convention, B_0 = 1
};

/// B_k under the given convention, from the shared cache.
Rational bernoulli_number(std::size_t k, Convention conv = Convention::minus);

/// Bernoulli polynomial B_m(x) = sum_{k<=m} C(m,k) B_k x^(m-k), exact.
Rational bernoulli_polynomial(std::size_t m, const Rational& x,
                              Convention conv = Convention::minus);

/// zeta(-p) exactly: -1/2 for p = 0, else -B_{p+1}/(p+1).
Rational zeta_neg_int(std::size_t p);

/// zeta(2k) exactly as (-1)^(k+1) (2 pi)^(2k) B_{2k} / (2 (2k)!), the pi
/// power kept symbolic. Rejects odd or nonpositive arguments.
PiPower zeta_even_exact(std::size_t two_rho);

}  // namespace faulhaber
