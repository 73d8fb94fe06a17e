#include "faulhaber/verification.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

using faulhaber::cross_validate;
using faulhaber::cross_validate_serial;
using faulhaber::generating_function_check;
using faulhaber::VerificationReport;

TEST_CASE("cross-validation passes on the reference grid") {
    const VerificationReport report = cross_validate(8, 50);
    CHECK(report.all_passed);
    CHECK(report.mismatches.empty());
    CHECK(report.numeric_max_rel_err < 1e-10);
    CHECK(report.numeric_max_rel_err > 0.0);  // the numeric path really ran
}

TEST_CASE("cross-validation on the trivial grid") {
    const VerificationReport report = cross_validate(0, 1);
    CHECK(report.all_passed);
    CHECK(report.mismatches.empty());
}

TEST_CASE("cross-validation rejects an empty n range") {
    CHECK_THROWS_AS(cross_validate(3, 0), std::domain_error);
}

TEST_CASE("serial and parallel runs produce identical reports") {
    const VerificationReport serial = cross_validate_serial(5, 20);
    const VerificationReport parallel =
        cross_validate(5, 20, {}, true, 1e-10, faulhaber::Exec::parallel);
    CHECK(serial.to_json() == parallel.to_json());
    CHECK(serial.numeric_max_rel_err == parallel.numeric_max_rel_err);
}

TEST_CASE("report serializes to the versioned schema and round-trips") {
    const VerificationReport report = cross_validate(2, 4, {}, false);
    const nlohmann::json doc = report.to_json();
    CHECK(doc.at("report_version") == 1);
    CHECK(doc.at("p_range") == nlohmann::json({0, 2}));
    CHECK(doc.at("n_range") == nlohmann::json({1, 4}));
    CHECK(doc.at("passed") == true);
    CHECK(doc.at("mismatches").is_array());
    CHECK(doc.contains("paths"));
    CHECK(doc.contains("max_rel_err"));

    const std::string once = doc.dump();
    const std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);
}

TEST_CASE("plain report rendering carries the verdict") {
    const VerificationReport report = cross_validate(1, 2, {}, false);
    std::ostringstream os;
    report.print(os);
    CHECK(os.str().find("PASSED") != std::string::npos);
    CHECK(os.str().find("mismatches: 0") != std::string::npos);
}

TEST_CASE("generating function residuals") {
    CHECK(generating_function_check(1.0, 0.1, 20) < 1e-15);
    CHECK(generating_function_check(0.0, 1e-8, 1) < 1e-15);

    // With terms = 2 the residual is the |t^4/720 - t^6/30240 + ...| tail;
    // at t = 1/2 that is 8.6289e-5 to the shown digits.
    const double res = generating_function_check(0.0, 0.5, 2);
    CHECK(res == doctest::Approx(8.6289e-5).epsilon(1e-3));
}

TEST_CASE("generating function residual shrinks as terms grow") {
    for (const auto& [x, t] : {std::pair{1.0, 1.0}, std::pair{0.5, -1.0}}) {
        double prev = generating_function_check(x, t, 5);
        for (unsigned terms = 6; terms <= 25; ++terms) {
            const double cur = generating_function_check(x, t, terms);
            // monotone until the ~2-ulp rounding floor of the lhs magnitude
            CHECK((cur <= prev || cur < 5e-16));
            prev = cur;
        }
        CHECK(prev < 1e-12);
    }
}

TEST_CASE("generating function domain") {
    CHECK_THROWS_AS(generating_function_check(0.0, 0.0, 5), std::domain_error);
    CHECK_THROWS_AS(generating_function_check(0.0, 2.0 * std::numbers::pi, 5),
                    std::domain_error);
    CHECK_THROWS_AS(generating_function_check(0.0, -7.0, 5), std::domain_error);
    CHECK_THROWS_AS(generating_function_check(0.0, 0.5, 0), std::domain_error);
}

TEST_CASE("leading coefficient is 1/(p+1) for p up to 20") {
    for (std::uint64_t p = 0; p <= 20; ++p) CHECK(faulhaber::leading_coefficient_check(p));
}

TEST_CASE("parity form is convention independent") {
    CHECK(faulhaber::convention_invariance_check(1, 50));
    CHECK(faulhaber::convention_invariance_check(4, 50));
    CHECK(faulhaber::convention_invariance_check(7, 50));
    CHECK_THROWS_AS(faulhaber::convention_invariance_check(0, 50), std::domain_error);
}
