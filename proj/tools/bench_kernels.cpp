// Compares the OpenMP kernels against their serial reference
// implementations: same inputs, timed side by side, and the outputs are
// required to match bitwise before a row is reported.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "psiparam/functional.hpp"
#include "psiparam/paths.hpp"
#include "psiparam/sample.hpp"
#include "psiparam/sphere.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-22s %10.1f ms %10.1f ms %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
    std::mt19937 rng(20240817);
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        std::vector<psiparam::ProbDist> dists;
        dists.reserve(20000);
        for (int i = 0; i < 20000; ++i) dists.push_back(psiparam::random_prob_dist(rng, 64));
        auto t0 = Clock::now();
        const double serial = psiparam::roundtrip_max_error_serial(dists);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        const double parallel = psiparam::roundtrip_max_error(dists);
        const double parallel_ms = ms_since(t0);
        report("roundtrip 20k x N=64", serial_ms, parallel_ms, serial == parallel);
    }

    {
        constexpr std::size_t grid = 4000000;
        auto t0 = Clock::now();
        const auto serial = psiparam::gleason_pure_search_serial(0.5, 0.5, grid);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel = psiparam::gleason_pure_search(0.5, 0.5, grid);
        const double parallel_ms = ms_since(t0);
        report("gleason grid 4M", serial_ms, parallel_ms,
               serial.residual == parallel.residual &&
                   serial.theta_best == parallel.theta_best);
    }

    {
        std::uniform_real_distribution<double> uni(0.05, 0.95);
        std::vector<double> q(20);
        for (double& v : q) v = uni(rng);
        const psiparam::WalkSpec spec(q);
        auto t0 = Clock::now();
        const auto serial = psiparam::enumerate_paths_serial(spec);
        const double serial_ms = ms_since(t0);
        t0 = Clock::now();
        const auto parallel = psiparam::enumerate_paths(spec);
        const double parallel_ms = ms_since(t0);
        report("paths T=20 (1M)", serial_ms, parallel_ms,
               serial.dist.values() == parallel.dist.values());
    }

    return 0;
}
