#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "psiparam/error.hpp"
#include "psiparam/matrix.hpp"
#include "psiparam/sample.hpp"
#include "psiparam/transform.hpp"

using namespace psiparam;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix hadamard2() {
    const double h = std::sqrt(0.5);
    return Matrix{{h, h}, {h, -h}};
}

// Taylor series for exp(G a); independent of the closed form used by
// clock_rotation.
Matrix expm_series(const Matrix& g, double a, int terms = 40) {
    Matrix result = Matrix::identity(g.rows());
    Matrix power = Matrix::identity(g.rows());
    double factorial = 1.0;
    for (int k = 1; k <= terms; ++k) {
        power = power * g;
        factorial *= k;
        result += power * (std::pow(a, k) / factorial);
    }
    return result;
}

}  // namespace

TEST_CASE("orthogonality is validated") {
    CHECK_NOTHROW(OrthogonalTransform(Matrix::identity(3)));
    CHECK_NOTHROW(OrthogonalTransform{hadamard2()});
    CHECK_THROWS_AS(OrthogonalTransform(Matrix{{1, 1}, {0, 1}}), ValidationError);
    CHECK_THROWS_AS(OrthogonalTransform(Matrix(2, 3)), DimensionError);
}

TEST_CASE("apply_to_wavefunction examples") {
    const double t = 0.2, a = 0.5;
    const WaveFunction advanced =
        apply_to_wavefunction(clock_rotation(a), WaveFunction({std::cos(t), std::sin(t)}));
    CHECK(advanced[0] == doctest::Approx(std::cos(t + a)).epsilon(1e-14));
    CHECK(advanced[1] == doctest::Approx(std::sin(t + a)).epsilon(1e-14));

    const WaveFunction psi({0.6, 0.8});
    const WaveFunction same =
        apply_to_wavefunction(OrthogonalTransform(Matrix::identity(2)), psi);
    CHECK(same[0] == doctest::Approx(0.6).epsilon(1e-14));

    const WaveFunction swapped = apply_to_wavefunction(
        OrthogonalTransform(Matrix{{0, 1}, {1, 0}}), WaveFunction({1.0, 0.0}));
    CHECK(swapped.amplitudes() == std::vector<double>{0.0, 1.0});

    CHECK_THROWS_AS(apply_to_wavefunction(OrthogonalTransform(Matrix::identity(3)), psi),
                    DimensionError);
}

TEST_CASE("clock_rotation examples") {
    CHECK(max_abs_diff(clock_rotation(0.0).matrix(), Matrix::identity(2)) == 0.0);

    // Matrix-exponential oracle for the generator [[0,-1],[1,0]].
    const Matrix generator{{0, -1}, {1, 0}};
    CHECK(max_abs_diff(clock_rotation(kPi / 2).matrix(),
                       expm_series(generator, kPi / 2)) < 1e-13);
    CHECK(max_abs_diff(clock_rotation(kPi / 2).matrix(), Matrix{{0, -1}, {1, 0}}) < 1e-12);
    for (double a : {0.1, 1.0, 2.5, -0.7}) {
        CHECK(max_abs_diff(clock_rotation(a).matrix(), expm_series(generator, a)) < 1e-13);
    }

    const double t = 0.9;
    const WaveFunction clock =
        apply_to_wavefunction(clock_rotation(t), WaveFunction({1.0, 0.0}));
    CHECK(clock[0] == doctest::Approx(std::cos(t)).epsilon(1e-14));
    CHECK(clock[1] == doctest::Approx(std::sin(t)).epsilon(1e-14));
}

TEST_CASE("rotation group law") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const double a = angle(rng), b = angle(rng);
        const Matrix composed = clock_rotation(a).matrix() * clock_rotation(b).matrix();
        CHECK(max_abs_diff(composed, clock_rotation(a + b).matrix()) < 1e-12);
    }
}

TEST_CASE("classical_map examples") {
    CHECK(max_abs_diff(classical_map(0.0, kPi / 2).matrix(), Matrix::identity(2)) < 1e-12);

    const StochasticMatrix mixing = classical_map(kPi / 4, kPi / 4);
    CHECK(max_abs_diff(mixing.matrix(), Matrix{{0.5, 0.5}, {0.5, 0.5}}) < 1e-12);
    CHECK(std::abs(determinant(mixing.matrix())) < 1e-12);

    CHECK(max_abs_diff(classical_map(kPi / 2, 0.0).matrix(), Matrix{{0, 1}, {1, 0}}) < 1e-12);

    CHECK_THROWS_AS(StochasticMatrix(Matrix{{0.5, 0.5}, {0.4, 0.5}}), ValidationError);
    CHECK_THROWS_AS(StochasticMatrix(Matrix{{1.2, 0.0}, {-0.2, 1.0}}), ValidationError);
}

TEST_CASE("no regular stochastic matrix unmixes the fair coin") {
    // Column-stochastic M with M (1/2, 1/2)^T = (1, 0)^T: columns are
    // (c, 1-c) and (d, 1-d) with c + d = 2, so c = d = 1 is the only
    // choice inside [0, 1].
    int feasible = 0;
    for (int i = 0; i <= 1000; ++i) {
        const double c = i / 1000.0;
        const double d = 2.0 - c;
        if (d >= 0.0 && d <= 1.0) {
            ++feasible;
            CHECK(c == doctest::Approx(1.0));
        }
    }
    CHECK(feasible == 1);
    const Matrix m{{1, 1}, {0, 0}};
    CHECK(std::abs(determinant(m)) < 1e-12);
    // And it is indeed the claimed map.
    const std::vector<double> image = m * std::vector<double>{0.5, 0.5};
    CHECK(image == std::vector<double>{1.0, 0.0});
}

TEST_CASE("is_deterministic examples") {
    CHECK(is_deterministic(OrthogonalTransform(Matrix::identity(4))).deterministic);

    // Every permutation conjugates elementary projections to elementary
    // projections; exhaustive up to N = 4.
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> sigma(n);
        for (std::size_t i = 0; i < n; ++i) sigma[i] = i + 1;
        do {
            const DeterminismVerdict verdict =
                is_deterministic(OrthogonalTransform::permutation(sigma));
            CHECK(verdict.deterministic);
            CHECK_FALSE(verdict.witness.has_value());
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    const DeterminismVerdict hadamard = is_deterministic(OrthogonalTransform(hadamard2()));
    CHECK_FALSE(hadamard.deterministic);
    REQUIRE(hadamard.witness.has_value());
    CHECK(*hadamard.witness == 1);

    // The witness is honest: its commutator is visibly nonzero.
    const Matrix u = hadamard2();
    const Matrix p = Matrix::diagonal({1.0, 0.0});
    const Matrix conj = u * p * u.transposed();
    CHECK(max_abs_diff(p * conj, conj * p) > 1e-3);
}

TEST_CASE("rotations that mix states are non-deterministic") {
    const DeterminismVerdict mixing = is_deterministic(clock_rotation(kPi / 3));
    CHECK_FALSE(mixing.deterministic);
    CHECK(mixing.witness.has_value());
    // Multiples of pi/2 permute (up to sign) and stay deterministic.
    CHECK(is_deterministic(clock_rotation(kPi / 2)).deterministic);
    CHECK(is_deterministic(clock_rotation(kPi)).deterministic);
}

TEST_CASE("Born-rule covariance under random orthogonal maps") {
    std::mt19937 rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const OrthogonalTransform u = random_orthogonal(rng, n);
        const WaveFunction psi = random_wavefunction(rng, n);
        const ProbDist p = born_decode(apply_to_wavefunction(u, psi));
        double sum = 0.0;
        for (double v : p.values()) sum += v;
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("permutations act classically on distributions") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        std::vector<std::size_t> sigma(n);
        for (std::size_t i = 0; i < n; ++i) sigma[i] = i + 1;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const OrthogonalTransform pi = OrthogonalTransform::permutation(sigma);

        const ProbDist p = random_prob_dist(rng, n);
        const WaveFunction psi = sqrt_encode(p);  // non-negative amplitudes
        const ProbDist lhs = born_decode(apply_to_wavefunction(pi, psi));
        const std::vector<double> rhs = pi.matrix() * p.values();
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(lhs.values()[i] - rhs[i]) < 1e-12);
    }
}

TEST_CASE("gauge_equivalent examples") {
    CHECK(gauge_equivalent(WaveFunction({0.6, 0.8}), WaveFunction({0.6, -0.8})));
    CHECK_FALSE(gauge_equivalent(WaveFunction({1.0, 0.0}), WaveFunction({0.0, 1.0})));
    const double h = std::sqrt(0.5);
    CHECK(gauge_equivalent(WaveFunction({h, h}), WaveFunction({-h, h})));
    CHECK_THROWS_AS(gauge_equivalent(WaveFunction({1.0}), WaveFunction({1.0, 0.0})),
                    DimensionError);
}
