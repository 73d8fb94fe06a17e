#include "faulhaber/hurwitz.hpp"

#include "faulhaber/bernoulli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

namespace faulhaber {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration
// on P_16. No x = 0 node, so integrands are only ever sampled at interior
// points of each panel.
struct GaussRule16 {
    std::array<double, 16> node{};
    std::array<double, 16> weight{};
};

const GaussRule16& gauss16() {
    static const GaussRule16 rule = [] {
        GaussRule16 g;
        constexpr int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 64; ++iter) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                dp = n * (z * p1 - p2) / (z * z - 1.0);
                const double step = p1 / dp;
                z -= step;
                if (std::abs(step) < 1e-15) break;
            }
            g.node[i] = -z;
            g.node[n - 1 - i] = z;
            const double w = 2.0 / ((1.0 - z * z) * dp * dp);
            g.weight[i] = w;
            g.weight[n - 1 - i] = w;
        }
        return g;
    }();
    return rule;
}

// Composite rule over [0, upper] split into equal panels. Panel values are
// computed independently (optionally across threads) and reduced in index
// order, so the sum is bit-identical for any thread count. Small panel
// counts stay on one thread; the fork costs more than it buys there.
template <typename F>
double panels_sum(const F& f, double upper, int panels, Exec exec) {
    const GaussRule16& g = gauss16();
    std::vector<double> cell(static_cast<std::size_t>(panels));
    const double h = upper / panels;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && panels >= 64)
    for (int i = 0; i < panels; ++i) {
        const double mid = (i + 0.5) * h;
        const double half = 0.5 * h;
        double s = 0.0;
        for (int j = 0; j < 16; ++j) s += g.weight[j] * f(mid + half * g.node[j]);
        cell[static_cast<std::size_t>(i)] = half * s;
    }
    double total = 0.0;
    for (double v : cell) total += v;
    return total;
}

// Doubles the panel count until successive estimates agree to tolerance.
// Two consecutive non-improving refinements past refinement 6 mean the
// rounding floor was hit with the tolerance still unmet; fail fast instead
// of grinding to 2^max_refinements panels.
template <typename F>
QuadratureResult refine_to_tolerance(const F& f, double upper,
                                     const QuadratureConfig& cfg, Exec exec) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::domain_error("QuadratureConfig: tolerances must be positive");
    if (cfg.max_refinements < 1)
        throw std::domain_error("QuadratureConfig: max_refinements must be >= 1");
    if (!(cfg.truncation_guard > 0.0))
        throw std::domain_error("QuadratureConfig: truncation_guard must be positive");

    constexpr int kMaxPanels = 1 << 22;
    int panels = 4;
    double prev = panels_sum(f, upper, panels, exec);
    double best = std::numeric_limits<double>::infinity();
    double diff = best;
    int stalls = 0;
    for (int r = 1; r <= cfg.max_refinements && panels <= kMaxPanels / 2; ++r) {
        panels *= 2;
        const double cur = panels_sum(f, upper, panels, exec);
        diff = std::abs(cur - prev);
        if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur)))
            return {cur, diff, r};
        if (diff < best) {
            best = diff;
            stalls = 0;
        } else if (r >= 6 && ++stalls >= 2) {
            break;
        }
        prev = cur;
    }
    const double achieved = std::min(best, diff);
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "quadrature did not reach the requested tolerance "
                  "(achieved error estimate %.3e)", achieved);
    throw QuadratureError(msg, achieved);
}

// Cutoff X such that the e^(-2 pi x) tail beyond it is below abs_tol even
// against the polynomial growth of the numerator.
double tail_cutoff(double s_abs, double z, const QuadratureConfig& cfg) {
    const double L = -std::log(cfg.abs_tol);
    const double x = (L + (s_abs + 1.0) * std::log(L + z + std::numbers::e)) / kTwoPi;
    return cfg.truncation_guard * std::max(z, x);
}

// log(e^t - 1) without overflow; t > 0.
double log_expm1(double t) {
    return t > 33.0 ? t + std::log1p(-std::exp(-t)) : std::log(std::expm1(t));
}

}  // namespace

double hermite_integrand(const HurwitzArgs& a, double x) {
    if (x == 0.0) return a.s / (kTwoPi * std::pow(a.z, a.s + 1.0));
    const double log_pow = 0.5 * a.s * std::log(x * x + a.z * a.z);
    return std::sin(a.s * std::atan(x / a.z)) * std::exp(-log_pow - log_expm1(kTwoPi * x));
}

QuadratureResult hurwitz_zeta_hermite_info(const HurwitzArgs& a,
                                           const QuadratureConfig& cfg, Exec exec) {
    if (!(a.z > 0.0)) throw std::domain_error("hurwitz_zeta_hermite: requires z > 0");
    if (a.s == 1.0) throw std::domain_error("hurwitz_zeta_hermite: s = 1 is the pole");

    const double upper = tail_cutoff(std::abs(a.s), a.z, cfg);
    const QuadratureResult q = refine_to_tolerance(
        [&a](double x) { return hermite_integrand(a, x); }, upper, cfg, exec);
    const double value = 0.5 * std::pow(a.z, -a.s) +
                         std::pow(a.z, 1.0 - a.s) / (a.s - 1.0) + 2.0 * q.value;
    return {value, 2.0 * q.error_estimate, q.refinements};
}

double hurwitz_zeta_hermite(const HurwitzArgs& a, const QuadratureConfig& cfg, Exec exec) {
    return hurwitz_zeta_hermite_info(a, cfg, exec).value;
}

double hermite_tail_numeric(std::uint64_t p, std::uint64_t n,
                            const QuadratureConfig& cfg, Exec exec) {
    const double z = static_cast<double>(n) + 1.0;
    const double pd = static_cast<double>(p);
    const auto f = [pd, z](double x) {
        if (x == 0.0) return pd == 0.0 ? 0.0 : pd * std::pow(z, pd - 1.0) / kTwoPi;
        const double log_pow = 0.5 * pd * std::log(x * x + z * z);
        return std::sin(pd * std::atan(x / z)) * std::exp(log_pow - log_expm1(kTwoPi * x));
    };
    return refine_to_tolerance(f, tail_cutoff(pd, z, cfg), cfg, exec).value;
}

double hermite_tail_closed(std::uint64_t p, std::uint64_t n) {
    const double z = static_cast<double>(n) + 1.0;
    double total = 0.0;
    for (std::uint64_t m = 0; m < p; ++m) {
        const unsigned rem = static_cast<unsigned>((p - m) % 4);
        if (rem == 0 || rem == 2) continue;  // sin(pi (p-m) / 2) vanishes
        const double sign = rem == 1 ? 1.0 : -1.0;
        const std::uint64_t arg = p - m + 1;
        const double zeta_val = (arg % 2 == 0)
                                    ? zeta_even_exact(arg).to_double()
                                    : riemann_zeta_series(static_cast<double>(arg), 1e-15);
        const double fac_ratio = Rational(factorial(p), factorial(m)).to_double();
        total += sign * fac_ratio * std::pow(z, static_cast<double>(m)) /
                 std::pow(kTwoPi, static_cast<double>(arg)) * zeta_val;
    }
    return total;
}

Rational hermite_tail_exact(std::uint64_t p, std::uint64_t n) {
    if (p == 0) throw std::domain_error("hermite_tail_exact: requires p >= 1");
    const BigInt z(n + 1);
    Rational sum;
    if (p % 2 == 1) {
        const std::uint64_t rho = (p + 1) / 2;
        for (std::uint64_t m = 0; m < rho; ++m)
            sum += Rational(ipow(z, 2 * m), factorial(2 * m) * factorial(2 * rho - 2 * m)) *
                   bernoulli_number(2 * rho - 2 * m);
        return Rational(factorial(2 * rho - 1), BigInt(2)) * sum;
    }
    const std::uint64_t rho = p / 2;
    for (std::uint64_t m = 0; m < rho; ++m)
        sum += Rational(ipow(z, 2 * m + 1),
                        factorial(2 * m + 1) * factorial(2 * rho - 2 * m)) *
               bernoulli_number(2 * rho - 2 * m);
    return Rational(factorial(2 * rho), BigInt(2)) * sum;
}

Rational hurwitz_zeta_neg_exact(std::uint64_t p, std::uint64_t n) {
    const BigInt z(n + 1);
    Rational value = Rational(ipow(z, p), BigInt(2)) -
                     Rational(ipow(z, p + 1), BigInt(p) + 1);
    if (p >= 1) value -= Rational(2) * hermite_tail_exact(p, n);
    return value;
}

double riemann_zeta_series(double s, double tol) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta_series: requires s > 1");
    if (!(tol > 0.0)) throw std::domain_error("riemann_zeta_series: tol must be positive");

    // B_{2k} / (2k)! for the Euler-Maclaurin tail, k = 1..7.
    constexpr int kOrders = 6;
    static const std::array<double, kOrders + 2> em = [] {
        std::array<double, kOrders + 2> c{};
        for (int k = 1; k <= kOrders + 1; ++k)
            c[static_cast<std::size_t>(k)] =
                bernoulli_number(2 * static_cast<std::size_t>(k)).to_double() /
                factorial(2 * static_cast<unsigned long>(k)).get_d();
        return c;
    }();

    // Smallest N whose first omitted tail term is safely below tol.
    const auto omitted_bound = [&](double nd) {
        double rising = s;
        for (int k = 1; k <= kOrders; ++k) rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        return std::abs(em[kOrders + 1] * rising) *
               std::pow(nd, -(s + 2.0 * kOrders + 1.0));
    };
    std::uint64_t trunc = 10;
    while (omitted_bound(static_cast<double>(trunc)) >= 0.5 * tol && trunc < (1u << 21))
        trunc *= 2;

    double sum = 0.0;
    for (std::uint64_t k = trunc - 1; k >= 1; --k)  // small terms first
        sum += std::pow(static_cast<double>(k), -s);

    const double nd = static_cast<double>(trunc);
    double tail = std::pow(nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nd, -s);
    double rising = s;
    for (int k = 1; k <= kOrders; ++k) {
        tail += em[static_cast<std::size_t>(k)] * rising * std::pow(nd, -(s + 2.0 * k - 1.0));
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    }
    return sum + tail;
}

}  // namespace faulhaber
