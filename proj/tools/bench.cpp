// Benchmark comparing serial and OpenMP-parallel execution of the two
// data-parallel kernels: the cross-validation grid and the Hermite
// quadrature panels. Results must match bit-for-bit; the reduction order
// is fixed regardless of thread count.

#include "faulhaber/hurwitz.hpp"
#include "faulhaber/verification.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <omp.h>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool reports_equal(const faulhaber::VerificationReport& a,
                   const faulhaber::VerificationReport& b) {
    return a.to_json() == b.to_json();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t p_max = 10, n_max = 150;
    if (argc > 1) p_max = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) n_max = std::strtoull(argv[2], nullptr, 10);

    std::printf("threads available: %d\n\n", omp_get_max_threads());

    // Untimed warm-up at full size: fills the Bernoulli cache, the
    // quadrature node table, and the allocator arenas, so neither timed
    // pass pays one-time costs.
    faulhaber::cross_validate_serial(p_max, n_max, {}, false);
    faulhaber::hurwitz_zeta_hermite({-static_cast<double>(p_max), 101.0});

    std::printf("grid cross-validation (p <= %llu, n <= %llu, exact paths only)\n",
                static_cast<unsigned long long>(p_max),
                static_cast<unsigned long long>(n_max));
    auto t0 = Clock::now();
    const auto serial_report =
        faulhaber::cross_validate_serial(p_max, n_max, {}, /*include_numeric=*/false);
    const double grid_serial = seconds_since(t0);

    t0 = Clock::now();
    const auto parallel_report = faulhaber::cross_validate(
        p_max, n_max, {}, /*include_numeric=*/false, 1e-10, faulhaber::Exec::parallel);
    const double grid_parallel = seconds_since(t0);

    std::printf("  serial:   %8.3f s\n", grid_serial);
    std::printf("  parallel: %8.3f s   (speedup %.2fx)\n", grid_parallel,
                grid_serial / grid_parallel);
    std::printf("  reports identical: %s\n\n",
                reports_equal(serial_report, parallel_report) ? "yes" : "NO");

    // Kernel 2: Hermite quadrature panels over a batch of arguments.
    faulhaber::QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    std::vector<faulhaber::HurwitzArgs> batch;
    for (int p = 0; p <= 10; ++p)
        for (double z : {1.0, 11.0, 31.0, 61.0, 101.0})
            batch.push_back({-static_cast<double>(p), z});

    std::printf("Hermite quadrature batch (%zu evaluations, rel_tol %.0e, best of 5)\n",
                batch.size(), cfg.rel_tol);
    std::vector<double> serial_vals(batch.size()), parallel_vals(batch.size());

    double quad_serial = 1e300, quad_parallel = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
        t0 = Clock::now();
        for (std::size_t i = 0; i < batch.size(); ++i)
            serial_vals[i] = faulhaber::hurwitz_zeta_hermite(batch[i], cfg,
                                                             faulhaber::Exec::serial);
        quad_serial = std::min(quad_serial, seconds_since(t0));

        t0 = Clock::now();
        for (std::size_t i = 0; i < batch.size(); ++i)
            parallel_vals[i] = faulhaber::hurwitz_zeta_hermite(batch[i], cfg,
                                                               faulhaber::Exec::parallel);
        quad_parallel = std::min(quad_parallel, seconds_since(t0));
    }

    bool identical = true;
    for (std::size_t i = 0; i < batch.size(); ++i)
        identical = identical && serial_vals[i] == parallel_vals[i];

    std::printf("  serial:   %8.3f s\n", quad_serial);
    std::printf("  parallel: %8.3f s   (speedup %.2fx)\n", quad_parallel,
                quad_serial / quad_parallel);
    std::printf("  values bit-identical: %s\n", identical ? "yes" : "NO");

    const bool ok = identical && reports_equal(serial_report, parallel_report);
    return ok ? 0 : 1;
}
