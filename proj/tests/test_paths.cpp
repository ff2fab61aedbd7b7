#include <doctest.h>

#include <cmath>
#include <random>

#include "psiparam/error.hpp"
#include "psiparam/paths.hpp"
#include "psiparam/sphere.hpp"

using namespace psiparam;

namespace {

// Product oracle, summed in reverse order to stay independent of the
// library's accumulation.
std::vector<double> oracle_paths(const std::vector<double>& q) {
    const std::size_t t_count = q.size();
    std::vector<double> p(std::size_t{1} << t_count);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
        double prob = 1.0;
        for (std::size_t t = t_count; t-- > 0;) {
            const bool up = (idx >> (t_count - 1 - t)) & 1u;
            prob *= up ? q[t] : 1.0 - q[t];
        }
        p[idx] = prob;
    }
    return p;
}

std::mt19937& shared_rng() {
    static std::mt19937 rng(101);
    return rng;
}

std::vector<double> random_q(std::size_t t_count) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> q(t_count);
    for (double& v : q) v = uni(shared_rng());
    return q;
}

}  // namespace

TEST_CASE("enumerate_paths examples") {
    const PathDistribution fair1 = enumerate_paths(WalkSpec(1, 0.5));
    CHECK(fair1.dist.values() == std::vector<double>{0.5, 0.5});

    const PathDistribution fair2 = enumerate_paths(WalkSpec(2, 0.5));
    CHECK(fair2.dist.values() == std::vector<double>{0.25, 0.25, 0.25, 0.25});

    // Path order 00, 01, 10, 11 with the first step in the high bit.
    const PathDistribution skewed =
        enumerate_paths(WalkSpec(std::vector<double>{0.1, 0.5}));
    REQUIRE(skewed.dist.size() == 4);
    CHECK(skewed.dist.values()[0] == doctest::Approx(0.45).epsilon(1e-14));
    CHECK(skewed.dist.values()[1] == doctest::Approx(0.45).epsilon(1e-14));
    CHECK(skewed.dist.values()[2] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(skewed.dist.values()[3] == doctest::Approx(0.05).epsilon(1e-14));

    CHECK_THROWS_AS(WalkSpec(0, 0.5), RangeError);
    CHECK_THROWS_AS(WalkSpec(21, 0.5), RangeError);
    CHECK_THROWS_AS(WalkSpec(3, 1.5), ValidationError);
}

TEST_CASE("path_wavefunction examples") {
    const WaveFunction uniform = path_wavefunction(WalkSpec(2, 0.5));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(uniform[i] == doctest::Approx(0.5).epsilon(1e-14));

    const WaveFunction certain = path_wavefunction(WalkSpec(1, 1.0));
    CHECK(certain.amplitudes() == std::vector<double>{0.0, 1.0});

    const WaveFunction skewed =
        path_wavefunction(WalkSpec(std::vector<double>{0.1, 0.5}));
    CHECK(skewed[0] == doctest::Approx(std::sqrt(0.45)).epsilon(1e-14));
    CHECK(skewed[3] == doctest::Approx(std::sqrt(0.05)).epsilon(1e-14));
}

TEST_CASE("Born recovery of the path distribution") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t t_count = 1 + shared_rng()() % 12;
        const WalkSpec spec(random_q(t_count));
        const ProbDist recovered = born_decode(path_wavefunction(spec));
        const std::vector<double> oracle = oracle_paths(spec.step_probs());
        REQUIRE(recovered.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(std::abs(recovered.values()[i] - oracle[i]) < 1e-12);
    }
}

TEST_CASE("path probabilities sum to one") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t t_count = 1 + shared_rng()() % 12;
        const std::vector<double> oracle = oracle_paths(random_q(t_count));
        double sum = 0.0;
        for (double v : oracle) sum += v;
        CHECK(std::abs(sum - 1.0) <= static_cast<double>(t_count) * 1e-15);
    }
}

TEST_CASE("marginal_at examples") {
    const ProbDist fair = marginal_at(WalkSpec(2, 0.5), 2);
    CHECK(fair.values()[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(fair.values()[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fair.values()[2] == doctest::Approx(0.25).epsilon(1e-14));

    const ProbDist origin =
        marginal_at(WalkSpec(std::vector<double>{0.3, 0.8, 0.1}), 0);
    CHECK(origin.values() == std::vector<double>{1.0});

    // Binomial coefficients over positions (-3, -1, +1, +3).
    const ProbDist binomial = marginal_at(WalkSpec(3, 0.5), 3);
    CHECK(binomial.values()[0] == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
    CHECK(binomial.values()[1] == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(binomial.values()[2] == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(binomial.values()[3] == doctest::Approx(1.0 / 8.0).epsilon(1e-14));

    CHECK_THROWS_AS(marginal_at(WalkSpec(2, 0.5), 3), RangeError);
}

TEST_CASE("marginals agree with an independent forward recursion") {
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t t_count = 1 + shared_rng()() % 10;
        const std::vector<double> q = random_q(t_count);
        const WalkSpec spec(q);
        for (std::size_t t = 0; t <= t_count; ++t) {
            const ProbDist marginal = marginal_at(spec, t);
            std::vector<double> forward(t + 1, 0.0);
            forward[0] = 1.0;
            for (std::size_t step = 0; step < t; ++step) {
                std::vector<double> next(t + 1, 0.0);
                for (std::size_t k = 0; k <= step; ++k) {
                    next[k] += forward[k] * (1.0 - q[step]);
                    next[k + 1] += forward[k] * q[step];
                }
                forward = std::move(next);
            }
            REQUIRE(marginal.size() == forward.size());
            for (std::size_t k = 0; k <= t; ++k)
                CHECK(std::abs(marginal.values()[k] - forward[k]) < 1e-12);
        }
    }
}

TEST_CASE("parallel and serial enumerations are identical") {
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t t_count = 1 + shared_rng()() % 14;
        const WalkSpec spec(random_q(t_count));
        CHECK(enumerate_paths(spec).dist.values() ==
              enumerate_paths_serial(spec).dist.values());
    }
}
