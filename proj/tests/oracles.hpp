#pragma once

// Test-only oracles, independent of the library's computation paths.

#include "faulhaber/rational.hpp"

#include <cstdint>
#include <vector>

namespace oracles {

// Akiyama-Tanigawa triangle; yields the B_1 = +1/2 convention.
inline faulhaber::Rational bernoulli_akiyama_tanigawa(unsigned n) {
    using faulhaber::Rational;
    std::vector<Rational> row(n + 1);
    for (unsigned j = 0; j <= n; ++j) row[j] = Rational(1, static_cast<long>(j) + 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; j + i <= n; ++j)
            row[j] = Rational(static_cast<long>(j) + 1) * (row[j] - row[j + 1]);
    return row[0];
}

// Deterministic 64-bit generator for property tests (xorshift*).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    long next_long(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace oracles
