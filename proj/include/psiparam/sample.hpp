#pragma once

#include <cstddef>
#include <random>

#include "psiparam/algebra.hpp"
#include "psiparam/simplex.hpp"
#include "psiparam/sphere.hpp"
#include "psiparam/transform.hpp"

namespace psiparam {

/// Uniform point on the simplex (normalized exponentials).
ProbDist random_prob_dist(std::mt19937& rng, std::size_t n);

/// Uniform point on the hypersphere, signed components.
WaveFunction random_wavefunction(std::mt19937& rng, std::size_t n);

ComplexWaveFunction random_complex_wavefunction(std::mt19937& rng, std::size_t n);
QuaternionWaveFunction random_quaternion_wavefunction(std::mt19937& rng, std::size_t n);

/// Haar-ish orthogonal matrix from Gram-Schmidt on Gaussian columns.
OrthogonalTransform random_orthogonal(std::mt19937& rng, std::size_t n);

}  // namespace psiparam
