#include "psiparam/sample.hpp"

#include <cmath>

namespace psiparam {

ProbDist random_prob_dist(std::mt19937& rng, std::size_t n) {
    std::exponential_distribution<double> exp(1.0);
    std::vector<double> p(n);
    double sum = 0.0;
    for (double& v : p) {
        v = exp(rng);
        sum += v;
    }
    for (double& v : p) v /= sum;
    return ProbDist(std::move(p));
}

WaveFunction random_wavefunction(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> a(n);
    double norm_sq = 0.0;
    for (double& v : a) {
        v = gauss(rng);
        norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    for (double& v : a) v /= norm;
    return WaveFunction(std::move(a));
}

ComplexWaveFunction random_complex_wavefunction(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::complex<double>> a(n);
    double norm_sq = 0.0;
    for (auto& v : a) {
        v = {gauss(rng), gauss(rng)};
        norm_sq += std::norm(v);
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& v : a) v /= norm;
    return ComplexWaveFunction(std::move(a));
}

QuaternionWaveFunction random_quaternion_wavefunction(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Quaternion> a(n);
    double norm_sq = 0.0;
    for (auto& v : a) {
        v = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        norm_sq += v.norm_sq();
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& v : a) {
        v.w /= norm;
        v.x /= norm;
        v.y /= norm;
        v.z /= norm;
    }
    return QuaternionWaveFunction(std::move(a));
}

OrthogonalTransform random_orthogonal(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = gauss(rng);
        // Modified Gram-Schmidt against earlier columns, twice for stability.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += m(i, j) * m(i, k);
                for (std::size_t i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm_sq += m(i, j) * m(i, j);
        const double norm = std::sqrt(norm_sq);
        for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
    }
    return OrthogonalTransform(std::move(m));
}

}  // namespace psiparam
