#include "faulhaber/hurwitz.hpp"

#include "subprocess.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

namespace {

const std::string kCli = FAULHABER_CLI_PATH;

subprocess::Result cli(const std::string& args) { return subprocess::run(kCli + " " + args); }

const char* const kTenthPowers = "91409924241424243424241924242500";

}  // namespace

TEST_CASE("sum: default method and the full method set agree digit for digit") {
    const auto base = cli("sum 10 1000");
    CHECK(base.exit_code == 0);
    CHECK(subprocess::strip(base.out) == kTenthPowers);

    for (const char* method : {"bernoulli-", "bernoulli+", "alt", "parity", "poly",
                               "recursive", "brute"}) {
        const auto r = cli(std::string("sum 10 1000 --method ") + method);
        CHECK(r.exit_code == 0);
        CHECK(subprocess::strip(r.out) == kTenthPowers);
    }
}

TEST_CASE("sum: every method prints the same digits across a small grid") {
    for (const std::string pn : {"0 13", "1 99", "7 12", "12 200"}) {
        std::vector<std::string> outputs;
        for (const char* method : {"bernoulli-", "bernoulli+", "alt", "recursive", "brute"})
            outputs.push_back(
                subprocess::strip(cli("sum " + pn + " --method " + method).out));
        for (const std::string& out : outputs) CHECK(out == outputs.front());
    }
    CHECK(subprocess::strip(cli("sum 12 200 --method parity").out) ==
          subprocess::strip(cli("sum 12 200 --method brute").out));
}

TEST_CASE("sum: parity respects --convention but not its result") {
    const auto minus = cli("sum 2 10 --method parity --convention minus");
    const auto plus = cli("sum 2 10 --method parity --convention plus");
    CHECK(minus.exit_code == 0);
    CHECK(subprocess::strip(minus.out) == "385");
    CHECK(subprocess::strip(plus.out) == "385");
}

TEST_CASE("bernoulli subcommand") {
    CHECK(subprocess::strip(cli("bernoulli 1 --convention plus").out) == "1/2");
    CHECK(subprocess::strip(cli("bernoulli 1").out) == "-1/2");
    CHECK(subprocess::strip(cli("bernoulli 0").out) == "1");
    CHECK(subprocess::strip(cli("bernoulli 3").out) == "0");
    CHECK(subprocess::strip(cli("bernoulli 12").out) == "-691/2730");
}

TEST_CASE("poly subcommand prints exact coefficients, lowest degree first") {
    const auto r = cli("poly 2");
    CHECK(r.exit_code == 0);
    CHECK(subprocess::strip(r.out) == "0 1/6 1/2 1/3");
    CHECK(subprocess::strip(cli("poly 0").out) == "0 1");
    CHECK(subprocess::strip(cli("poly 3").out) == "0 0 1/4 1/2 1/4");
}

TEST_CASE("zeta subcommand: exact, pi-power, and numeric branches") {
    CHECK(subprocess::strip(cli("zeta 0").out) == "-1/2");
    CHECK(subprocess::strip(cli("zeta -1").out) == "-1/12");
    CHECK(subprocess::strip(cli("zeta -2").out) == "0");
    CHECK(subprocess::strip(cli("zeta 4").out) == "1/90 * pi^4");

    const auto odd = cli("zeta 3");
    CHECK(odd.exit_code == 0);
    CHECK(std::abs(std::strtod(odd.out.c_str(), nullptr) - 1.202056903159594) < 1e-12);

    const auto frac = cli("zeta 2.5");
    CHECK(frac.exit_code == 0);
    const double expected = faulhaber::riemann_zeta_series(2.5, 1e-13);
    CHECK(std::abs(std::strtod(frac.out.c_str(), nullptr) - expected) < 1e-10);

    const auto below_one = cli("zeta -0.5");
    CHECK(below_one.exit_code == 0);
    // zeta(-1/2) = -0.2078862...
    CHECK(std::abs(std::strtod(below_one.out.c_str(), nullptr) + 0.20788622497735) < 1e-9);
}

TEST_CASE("hurwitz subcommand") {
    const auto r = cli("hurwitz 0 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 8) == "-1.5 +/-");

    const auto z2 = cli("hurwitz 2 1");
    CHECK(z2.exit_code == 0);
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    CHECK(std::abs(std::strtod(z2.out.c_str(), nullptr) - pi2_6) < 1e-10);
}

TEST_CASE("verify subcommand") {
    const auto r = cli("verify --pmax 3 --nmax 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASSED") != std::string::npos);
    CHECK(r.out.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("json output is a single document and round-trips idempotently") {
    for (const std::string args :
         {"sum 10 1000 --format json", "bernoulli 1 --convention plus --format json",
          "poly 2 --format json", "zeta 4 --format json", "hurwitz 0 2 --format json",
          "verify --pmax 2 --nmax 5 --format json"}) {
        const auto r = cli(args);
        CHECK(r.exit_code == 0);
        const nlohmann::json doc = nlohmann::json::parse(r.out);
        const std::string once = doc.dump();
        const std::string twice = nlohmann::json::parse(once).dump();
        CHECK(once == twice);
    }

    const auto sum = cli("sum 10 1000 --format json");
    const nlohmann::json sum_doc = nlohmann::json::parse(sum.out);
    CHECK(sum_doc.at("value") == kTenthPowers);
    CHECK(sum_doc.at("method") == "bernoulli-");
    CHECK(sum_doc.at("convention") == "minus");

    const auto verify = cli("verify --pmax 2 --nmax 5 --format json");
    const nlohmann::json verify_doc = nlohmann::json::parse(verify.out);
    CHECK(verify_doc.at("report_version") == 1);
    CHECK(verify_doc.at("passed") == true);
}

TEST_CASE("exit code 1: domain errors and bad values") {
    CHECK(cli("sum abc 3").exit_code == 1);
    CHECK(cli("sum 3 4x").exit_code == 1);
    CHECK(cli("sum 3 4 --method frobnicate").exit_code == 1);
    CHECK(cli("sum 3 4 --convention sometimes").exit_code == 1);
    CHECK(cli("sum 0 5 --method parity").exit_code == 1);
    CHECK(cli("bernoulli -1").exit_code != 0);
    CHECK(cli("zeta 1").exit_code == 1);
    CHECK(cli("zeta nope").exit_code == 1);
    CHECK(cli("hurwitz 1 1").exit_code == 1);
    CHECK(cli("hurwitz 2 0").exit_code == 1);
    CHECK(cli("hurwitz 2 1 --tol -1e-5").exit_code == 1);
    CHECK(cli("sum 3 4 --format yaml").exit_code == 1);
}

TEST_CASE("exit code 2: quadrature convergence failure") {
    CHECK(cli("hurwitz 2 1 --tol 1e-300").exit_code == 2);
}

TEST_CASE("exit code 64: usage errors") {
    CHECK(cli("").exit_code == 64);
    CHECK(cli("frobnicate 1 2").exit_code == 64);
    CHECK(cli("sum 3").exit_code == 64);
    CHECK(cli("sum 3 4 --no-such-flag").exit_code == 64);
    CHECK(cli("--help").exit_code == 0);
}
