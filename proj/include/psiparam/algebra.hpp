#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "psiparam/quaternion.hpp"
#include "psiparam/simplex.hpp"
#include "psiparam/sphere.hpp"

namespace psiparam {

/// The three associative division algebras a wave-function can live over.
enum class ScalarAlgebra { Real, Complex, Quaternion };

/// Real dimension of one scalar: 1, 2 or 4.
std::size_t block_dim(ScalarAlgebra algebra);

/// Shape of the real embedding of an N-dimensional wave-function.
struct BlockEmbedding {
    ScalarAlgebra algebra;
    std::size_t source_dim;
    std::size_t target_dim;  // source_dim * block_dim
};

BlockEmbedding embedding_info(ScalarAlgebra algebra, std::size_t n);

/// Unit vector of complex amplitudes; same normalization contract as the
/// real WaveFunction.
class ComplexWaveFunction {
public:
    explicit ComplexWaveFunction(std::vector<std::complex<double>> amplitudes);
    std::size_t size() const { return a_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return a_; }

private:
    std::vector<std::complex<double>> a_;
};

/// Unit vector of quaternion amplitudes.
class QuaternionWaveFunction {
public:
    explicit QuaternionWaveFunction(std::vector<Quaternion> amplitudes);
    std::size_t size() const { return a_.size(); }
    const std::vector<Quaternion>& amplitudes() const { return a_; }

private:
    std::vector<Quaternion> a_;
};

/// Real coordinates of each scalar, concatenated. Norm-preserving.
WaveFunction embed_real(const ComplexWaveFunction& psi);
WaveFunction embed_real(const QuaternionWaveFunction& psi);

/// Born probabilities marginalized over the scalar's real coordinates:
/// p_n = |a_n|^2, the block sum of the real Born decode of the embedding.
ProbDist marginal_born(const ComplexWaveFunction& psi);
ProbDist marginal_born(const QuaternionWaveFunction& psi);

/// Checks that measurement renders the quaternionic projector real
/// diagonal: every diagonal entry of v v^dagger is a real scalar, its
/// embedded block collapses to a multiple of the identity, and the block
/// traces recover the marginal Born distribution.
bool collapse_diagonalizes(const QuaternionWaveFunction& psi);

}  // namespace psiparam
