#pragma once

#include "faulhaber/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace faulhaber {

/// Whether a quadrature or grid evaluation may fan out over OpenMP
/// threads. Results are bit-identical either way: panel and cell values
/// are reduced in index order, never in completion order.
enum class Exec { serial, parallel };

/// Tolerances and limits for the semi-infinite quadrature.
struct QuadratureConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    int max_refinements = 30;
    double truncation_guard = 2.0;  // multiplier on the analytic cutoff
};

/// Arguments of the Hurwitz zeta function zeta(s, z); real s != 1, z > 0.
struct HurwitzArgs {
    double s = 0.0;
    double z = 1.0;
};

/// Raised when panel doubling reaches its limit, or stalls, before the
/// requested tolerance; carries the best error estimate achieved.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved_error() const { return achieved_; }

private:
    double achieved_;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int refinements = 0;
};

/// Integrand of the exponentially damped integral in the Hermite
/// representation: sin(s atan(x/z)) / ((x^2+z^2)^(s/2) (e^(2 pi x) - 1)).
/// The removable singularity at x = 0 is supplied analytically as
/// s / (2 pi z^(s+1)).
double hermite_integrand(const HurwitzArgs& a, double x);

/// zeta(s, z) for real s != 1, z > 0 via the Hermite representation:
/// z^(-s)/2 + z^(1-s)/(s-1) + 2 * integral of hermite_integrand over
/// [0, infinity). Deterministic for a fixed config.
QuadratureResult hurwitz_zeta_hermite_info(const HurwitzArgs& a,
                                           const QuadratureConfig& cfg = {},
                                           Exec exec = Exec::parallel);
double hurwitz_zeta_hermite(const HurwitzArgs& a,
                            const QuadratureConfig& cfg = {},
                            Exec exec = Exec::parallel);

/// The damped tail integral at s = -p, z = n+1, i.e.
/// integral of sin(p atan(x/(n+1))) (x^2+(n+1)^2)^(p/2) / (e^(2 pi x) - 1),
/// by quadrature. The power factor is evaluated in log space so large p
/// cannot overflow the node values.
double hermite_tail_numeric(std::uint64_t p, std::uint64_t n,
                            const QuadratureConfig& cfg = {},
                            Exec exec = Exec::parallel);

/// Same integral through its zeta-series closed form
/// sum_{m<p} p! (n+1)^m / (m! (2 pi)^(p-m+1)) sin(pi(p-m)/2) zeta(p-m+1),
/// in floating point. The sine factor comes from an exact mod-4 table, so
/// terms with p-m even contribute exactly zero and zeta(1) never arises.
double hermite_tail_closed(std::uint64_t p, std::uint64_t n);

/// Same integral reduced to a finite Bernoulli sum, exact (the pi powers
/// cancel identically). This is the designated exact path. Rejects p = 0.
Rational hermite_tail_exact(std::uint64_t p, std::uint64_t n);

/// Analytically continued zeta(-p, n+1), exact:
/// (n+1)^p/2 - (n+1)^(p+1)/(p+1) - 2 * hermite_tail_exact(p, n),
/// with the tail identically zero for p = 0.
Rational hurwitz_zeta_neg_exact(std::uint64_t p, std::uint64_t n);

/// zeta(s) for real s > 1 by direct summation with an Euler-Maclaurin
/// tail, to absolute accuracy tol.
double riemann_zeta_series(double s, double tol = 1e-12);

}  // namespace faulhaber
