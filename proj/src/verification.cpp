#include "faulhaber/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace faulhaber {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::vector<std::string> kExactPaths = {
    "bernoulli-", "bernoulli+", "alternating", "parity-minus", "parity-plus",
    "via-poly",   "recursive",  "polynomial",  "continuation",
};

// The quadrature cost dominates, so the Hermite path runs on this
// subsample instead of the full grid.
const std::vector<std::uint64_t> kNumericSampleN = {0, 1, 2, 5, 10, 20};
constexpr std::uint64_t kNumericMaxP = 10;

struct NumericOutcome {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    double rel_err = 0.0;
    bool failed = false;
    std::string expected;
    std::string got;
};

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json doc;
    doc["report_version"] = 1;
    doc["p_range"] = {0, p_max};
    doc["n_range"] = {1, n_max};
    doc["paths"] = paths_compared;
    auto& arr = doc["mismatches"] = nlohmann::json::array();
    for (const Mismatch& m : mismatches)
        arr.push_back({{"p", m.p},
                       {"n", m.n},
                       {"path", m.path},
                       {"expected", m.expected},
                       {"got", m.got}});
    doc["max_rel_err"] = numeric_max_rel_err;
    doc["numeric_tolerance"] = numeric_tolerance;
    doc["passed"] = all_passed;
    return doc;
}

void VerificationReport::print(std::ostream& os) const {
    os << "power-sum cross-validation\n"
       << "  p range: 0.." << p_max << "   n range: 1.." << n_max << "\n"
       << "  paths:";
    for (const std::string& p : paths_compared) os << " " << p;
    os << "\n  mismatches: " << mismatches.size() << "\n";
    for (const Mismatch& m : mismatches)
        os << "    p=" << m.p << " n=" << m.n << " path=" << m.path
           << " expected=" << m.expected << " got=" << m.got << "\n";
    os << "  numeric max rel err: " << format_double(numeric_max_rel_err)
       << " (tolerance " << format_double(numeric_tolerance) << ")\n"
       << "  result: " << (all_passed ? "PASSED" : "FAILED") << "\n";
}

VerificationReport cross_validate(std::uint64_t p_max, std::uint64_t n_max,
                                  const QuadratureConfig& cfg, bool include_numeric,
                                  double numeric_tolerance, Exec exec) {
    if (n_max < 1) throw std::domain_error("cross_validate: requires n_max >= 1");

    VerificationReport report;
    report.p_max = p_max;
    report.n_max = n_max;
    report.numeric_tolerance = numeric_tolerance;
    report.paths_compared = kExactPaths;

    // Exact section: one row of mismatch results per p, reduced in p order.
    std::vector<std::vector<Mismatch>> rows(p_max + 1);
    const long long p_top = static_cast<long long>(p_max);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
    for (long long ps = 0; ps <= p_top; ++ps) {
        const std::uint64_t p = static_cast<std::uint64_t>(ps);
        std::vector<Mismatch>& out = rows[p];
        const SumPolynomial poly = powersum_polynomial(p);
        const Rational zeta_at_minus_p = zeta_neg_int(p);
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            const PowerSumQuery q{p, n};
            const BigInt oracle = powersum_bruteforce(q);
            const std::string oracle_str = oracle.get_str();
            const auto check = [&](const char* path, const BigInt& got) {
                if (got != oracle)
                    out.push_back({p, n, path, oracle_str, got.get_str()});
            };
            check("bernoulli-", powersum_bernoulli_minus(q));
            check("bernoulli+", powersum_bernoulli_plus(q));
            check("alternating", powersum_alternating(q));
            if (p >= 1) {
                check("parity-minus", powersum_parity(q, Convention::minus));
                check("parity-plus", powersum_parity(q, Convention::plus));
                check("via-poly", powersum_via_poly(q));
            }
            check("recursive", powersum_recursive(q));

            const Rational poly_val = poly.evaluate(BigInt(n));
            if (!poly_val.is_integer() || poly_val.to_integer() != oracle)
                out.push_back({p, n, "polynomial", oracle_str, poly_val.to_string()});

            const Rational continued = zeta_at_minus_p - hurwitz_zeta_neg_exact(p, n);
            if (continued != Rational(oracle))
                out.push_back({p, n, "continuation", oracle_str, continued.to_string()});
        }
    }
    for (std::vector<Mismatch>& row : rows)
        report.mismatches.insert(report.mismatches.end(), row.begin(), row.end());

    if (include_numeric) {
        report.paths_compared.push_back("hermite-numeric");
        std::vector<NumericOutcome> slots;
        for (std::uint64_t p = 0; p <= std::min(p_max, kNumericMaxP); ++p)
            for (std::uint64_t n : kNumericSampleN)
                if (n <= n_max) slots.push_back({p, n, 0.0, false, "", ""});

        const long long cells = static_cast<long long>(slots.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
        for (long long i = 0; i < cells; ++i) {
            NumericOutcome& slot = slots[static_cast<std::size_t>(i)];
            const double exact = hurwitz_zeta_neg_exact(slot.p, slot.n).to_double();
            slot.expected = format_double(exact);
            try {
                const double numeric = hurwitz_zeta_hermite(
                    {-static_cast<double>(slot.p), static_cast<double>(slot.n) + 1.0},
                    cfg, exec);
                slot.rel_err = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
                slot.got = format_double(numeric);
                slot.failed = slot.rel_err > numeric_tolerance;
            } catch (const QuadratureError& e) {
                slot.failed = true;
                slot.got = std::string("convergence failure: ") + e.what();
                slot.rel_err = std::numeric_limits<double>::infinity();
            }
        }
        for (const NumericOutcome& slot : slots) {
            report.numeric_max_rel_err = std::max(report.numeric_max_rel_err, slot.rel_err);
            if (slot.failed)
                report.mismatches.push_back(
                    {slot.p, slot.n, "hermite-numeric", slot.expected, slot.got});
        }
    }

    report.all_passed = report.mismatches.empty() &&
                        report.numeric_max_rel_err < numeric_tolerance;
    return report;
}

VerificationReport cross_validate_serial(std::uint64_t p_max, std::uint64_t n_max,
                                         const QuadratureConfig& cfg,
                                         bool include_numeric, double numeric_tolerance) {
    return cross_validate(p_max, n_max, cfg, include_numeric, numeric_tolerance,
                          Exec::serial);
}

double generating_function_check(double x, double t, unsigned terms) {
    if (t == 0.0)
        throw std::domain_error("generating_function_check: t = 0 (the limit is 1)");
    if (!(std::abs(t) < 2.0 * std::numbers::pi))
        throw std::domain_error("generating_function_check: |t| must be below 2 pi");
    if (terms < 1)
        throw std::domain_error("generating_function_check: requires terms >= 1");

    const double lhs = t * std::exp(x * t) / std::expm1(t);
    const Rational xr = Rational::from_double(x);
    double partial = 0.0;
    double t_pow_over_fact = 1.0;  // t^m / m!
    for (unsigned m = 0; m <= terms; ++m) {
        partial += bernoulli_polynomial(m, xr).to_double() * t_pow_over_fact;
        t_pow_over_fact *= t / (m + 1.0);
    }
    return std::abs(lhs - partial);
}

bool leading_coefficient_check(std::uint64_t p) {
    const SumPolynomial poly = powersum_polynomial(p);
    return poly.coefficients[p + 1] == Rational(1) / Rational(BigInt(p) + 1);
}

bool convention_invariance_check(std::uint64_t p, std::uint64_t n_max) {
    if (p < 1) throw std::domain_error("convention_invariance_check: requires p >= 1");
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const PowerSumQuery q{p, n};
        if (powersum_parity(q, Convention::minus) != powersum_parity(q, Convention::plus))
            return false;
    }
    return true;
}

}  // namespace faulhaber
