// faulhaber: exact power sums S_p(n), Bernoulli numbers, and Hurwitz zeta
// evaluation on the command line. Exit status: 0 success, 1 domain error,
// 2 quadrature convergence failure, 64 usage error.

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/hurwitz.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using faulhaber::Convention;
using faulhaber::PowerSumQuery;
using faulhaber::QuadratureConfig;
using nlohmann::json;

std::uint64_t parse_u64(const std::string& text, const char* what) {
    errno = 0;
    char* end = nullptr;
    if (text.empty() || text[0] == '-' || text[0] == '+')
        throw std::domain_error(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0')
        throw std::domain_error(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    return v;
}

double parse_double(const std::string& text, const char* what) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end == text.c_str() || *end != '\0' || !std::isfinite(v))
        throw std::domain_error(std::string(what) + " must be a finite number, got '" + text + "'");
    return v;
}

Convention parse_convention(const std::string& text) {
    if (text == "minus") return Convention::minus;
    if (text == "plus") return Convention::plus;
    throw std::domain_error("unknown convention '" + text + "' (expected minus or plus)");
}

bool parse_json_flag(const std::string& format) {
    if (format == "json") return true;
    if (format == "plain") return false;
    throw std::domain_error("unknown format '" + format + "' (expected plain or json)");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void emit(const json& doc) {
    std::cout << doc.dump() << "\n";
}

faulhaber::BigInt run_method(const std::string& method, const PowerSumQuery& q,
                             Convention conv) {
    if (method == "bernoulli-") return faulhaber::powersum_bernoulli_minus(q);
    if (method == "bernoulli+") return faulhaber::powersum_bernoulli_plus(q);
    if (method == "alt") return faulhaber::powersum_alternating(q);
    if (method == "parity") return faulhaber::powersum_parity(q, conv);
    if (method == "poly") return faulhaber::powersum_via_poly(q);
    if (method == "recursive") return faulhaber::powersum_recursive(q);
    if (method == "brute") return faulhaber::powersum_bruteforce(q);
    throw std::domain_error("unknown method '" + method + "'");
}

QuadratureConfig config_for_tol(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("--tol must be positive");
    QuadratureConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol * 1e-3;
    return cfg;
}

int run_sum(const std::string& p_text, const std::string& n_text,
            const std::string& method, const std::string& conv_text, bool as_json) {
    const PowerSumQuery q{parse_u64(p_text, "p"), parse_u64(n_text, "n")};
    const Convention conv = parse_convention(conv_text);
    const faulhaber::BigInt value = run_method(method, q, conv);
    if (as_json)
        emit(json{{"p", q.p}, {"n", q.n}, {"method", method},
                  {"convention", conv_text}, {"value", value.get_str()}});
    else
        std::cout << value.get_str() << "\n";
    return 0;
}

int run_bernoulli(const std::string& k_text, const std::string& conv_text, bool as_json) {
    const std::uint64_t k = parse_u64(k_text, "k");
    const Convention conv = parse_convention(conv_text);
    const faulhaber::Rational b = faulhaber::bernoulli_number(k, conv);
    if (as_json)
        emit(json{{"k", k}, {"convention", conv_text}, {"value", b.to_string()}});
    else
        std::cout << b.to_string() << "\n";
    return 0;
}

int run_poly(const std::string& p_text, const std::string& conv_text, bool as_json) {
    const std::uint64_t p = parse_u64(p_text, "p");
    const Convention conv = parse_convention(conv_text);
    const faulhaber::SumPolynomial poly = faulhaber::powersum_polynomial(p, conv);
    if (as_json) {
        json coeffs = json::array();
        for (const faulhaber::Rational& c : poly.coefficients) coeffs.push_back(c.to_string());
        emit(json{{"p", p}, {"coefficients", coeffs}});
    } else {
        for (std::size_t d = 0; d < poly.coefficients.size(); ++d)
            std::cout << (d ? " " : "") << poly.coefficients[d].to_string();
        std::cout << "\n";
    }
    return 0;
}

int run_zeta(const std::string& s_text, double tol, bool as_json) {
    const double s = parse_double(s_text, "s");
    if (s == 1.0) throw std::domain_error("zeta has a pole at s = 1");

    const bool integral = s == std::floor(s) && std::abs(s) < 9e15;
    if (integral && s <= 0.0) {
        const faulhaber::Rational v = faulhaber::zeta_neg_int(static_cast<std::uint64_t>(-s));
        if (as_json)
            emit(json{{"s", s}, {"kind", "rational"}, {"value", v.to_string()},
                      {"numeric", v.to_double()}});
        else
            std::cout << v.to_string() << "\n";
        return 0;
    }
    if (integral && s >= 2.0 && std::fmod(s, 2.0) == 0.0) {
        const faulhaber::PiPower v = faulhaber::zeta_even_exact(static_cast<std::uint64_t>(s));
        if (as_json)
            emit(json{{"s", s}, {"kind", "pi-power"},
                      {"coefficient", v.coefficient.to_string()},
                      {"pi_exponent", v.pi_exponent}, {"numeric", v.to_double()}});
        else
            std::cout << v.to_string() << "\n";
        return 0;
    }
    double value;
    if (s > 1.0) {
        value = faulhaber::riemann_zeta_series(s, tol);
    } else {
        value = faulhaber::hurwitz_zeta_hermite({s, 1.0}, config_for_tol(tol));
    }
    if (as_json)
        emit(json{{"s", s}, {"kind", "numeric"}, {"value", value}});
    else
        std::cout << format_double(value) << "\n";
    return 0;
}

int run_hurwitz(const std::string& s_text, const std::string& z_text, double tol,
                bool as_json) {
    const double s = parse_double(s_text, "s");
    const double z = parse_double(z_text, "z");
    const faulhaber::QuadratureResult r =
        faulhaber::hurwitz_zeta_hermite_info({s, z}, config_for_tol(tol));
    if (as_json)
        emit(json{{"s", s}, {"z", z}, {"value", r.value},
                  {"error_estimate", r.error_estimate}, {"refinements", r.refinements}});
    else
        std::cout << format_double(r.value) << " +/- " << format_double(r.error_estimate)
                  << "\n";
    return 0;
}

int run_verify(std::uint64_t p_max, std::uint64_t n_max, bool as_json) {
    const faulhaber::VerificationReport report = faulhaber::cross_validate(p_max, n_max);
    if (as_json)
        emit(report.to_json());
    else
        report.print(std::cout);
    return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");  // '.' decimal separator, no digit grouping

    CLI::App app{"exact power sums, Bernoulli numbers, and Hurwitz zeta evaluation"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format: plain or json");

    std::string p_text, n_text, k_text, s_text, z_text;
    std::string method = "bernoulli-";
    std::string convention = "minus";
    double tol = 1e-12;
    std::uint64_t verify_pmax = 8, verify_nmax = 50;

    CLI::App* sum = app.add_subcommand("sum", "S_p(n), the sum of the first n p-th powers");
    sum->add_option("p", p_text, "power (nonnegative integer)")->required();
    sum->add_option("n", n_text, "upper limit (nonnegative integer)")->required();
    sum->add_option("--method", method,
                    "bernoulli-|bernoulli+|alt|parity|poly|recursive|brute");
    sum->add_option("--convention", convention, "minus|plus");
    sum->fallthrough();

    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Bernoulli number B_k");
    bernoulli->add_option("k", k_text, "index (nonnegative integer)")->required();
    bernoulli->add_option("--convention", convention, "minus|plus");
    bernoulli->fallthrough();

    CLI::App* poly = app.add_subcommand("poly", "coefficients of S_p as a polynomial in n");
    poly->add_option("p", p_text, "power (nonnegative integer)")->required();
    poly->add_option("--convention", convention, "minus|plus");
    poly->fallthrough();

    CLI::App* zeta = app.add_subcommand("zeta", "Riemann zeta at real s != 1");
    zeta->add_option("s", s_text, "argument")->required();
    zeta->add_option("--tol", tol, "target tolerance for numeric evaluation");
    zeta->fallthrough();

    CLI::App* hurwitz = app.add_subcommand("hurwitz", "Hurwitz zeta(s, z), s != 1, z > 0");
    hurwitz->add_option("s", s_text, "argument")->required();
    hurwitz->add_option("z", z_text, "shift (must be positive)")->required();
    hurwitz->add_option("--tol", tol, "target tolerance");
    hurwitz->fallthrough();

    CLI::App* verify = app.add_subcommand("verify", "cross-validate all evaluation paths");
    verify->add_option("--pmax", verify_pmax, "largest power to check");
    verify->add_option("--nmax", verify_nmax, "largest upper limit to check");
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        const bool as_json = parse_json_flag(format);
        if (sum->parsed()) return run_sum(p_text, n_text, method, convention, as_json);
        if (bernoulli->parsed()) return run_bernoulli(k_text, convention, as_json);
        if (poly->parsed()) return run_poly(p_text, convention, as_json);
        if (zeta->parsed()) return run_zeta(s_text, tol, as_json);
        if (hurwitz->parsed()) return run_hurwitz(s_text, z_text, tol, as_json);
        if (verify->parsed()) return run_verify(verify_pmax, verify_nmax, as_json);
    } catch (const faulhaber::QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
