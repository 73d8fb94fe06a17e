#pragma once

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/hurwitz.hpp"
#include "faulhaber/powersum.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace faulhaber {

/// One disagreement between an evaluation path and its reference value.
/// Reports carry the values themselves so a failing run is diagnosable
/// from the report alone.
struct Mismatch {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    std::string path;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::uint64_t p_max = 0;
    std::uint64_t n_max = 0;
    std::vector<std::string> paths_compared;
    std::vector<Mismatch> mismatches;
    double numeric_max_rel_err = 0.0;
    double numeric_tolerance = 0.0;
    bool all_passed = false;

    nlohmann::json to_json() const;  // versioned document, schema v1
    void print(std::ostream& os) const;
};

/// Runs every exact power-sum path against the brute-force oracle on the
/// full grid 0 <= p <= p_max, 1 <= n <= n_max (parity and via-poly for
/// p >= 1), plus the exact continuation identity
/// zeta(-p) - zeta(-p, n+1) = S_p(n), and the numeric Hermite path on the
/// subsampled grid p <= 10, n in {0, 1, 2, 5, 10, 20}. Exact comparisons
/// are equality; numeric ones are relative error against numeric_tolerance.
/// Quadrature convergence failures become mismatches, not exceptions.
VerificationReport cross_validate(std::uint64_t p_max, std::uint64_t n_max,
                                  const QuadratureConfig& cfg = {},
                                  bool include_numeric = true,
                                  double numeric_tolerance = 1e-10,
                                  Exec exec = Exec::parallel);

/// Single-threaded reference run; produces a report identical to
/// cross_validate's for the same arguments.
VerificationReport cross_validate_serial(std::uint64_t p_max, std::uint64_t n_max,
                                         const QuadratureConfig& cfg = {},
                                         bool include_numeric = true,
                                         double numeric_tolerance = 1e-10);

/// Residual of the Bernoulli-polynomial generating function:
/// | t e^(xt) / (e^t - 1)  -  sum_{m=0..terms} B_m(x) t^m / m! |.
/// Requires 0 < |t| < 2 pi and terms >= 1.
double generating_function_check(double x, double t, unsigned terms);

/// True iff the degree-(p+1) coefficient of the sum polynomial is exactly
/// 1/(p+1), i.e. the Riemann-sum limit of S_p(n)/n^(p+1).
bool leading_coefficient_check(std::uint64_t p);

/// True iff the parity form agrees under both B_1 conventions for every
/// 1 <= n <= n_max. Requires p >= 1.
bool convention_invariance_check(std::uint64_t p, std::uint64_t n_max);

}  // namespace faulhaber
