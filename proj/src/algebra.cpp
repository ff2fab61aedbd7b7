#include "psiparam/algebra.hpp"

#include <cmath>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr double kNormTol = 1e-9;
constexpr double kRealTol = 1e-12;
}  // namespace

Matrix left_matrix(const Quaternion& q) {
    return Matrix{{q.w, -q.x, -q.y, -q.z},
                  {q.x, q.w, -q.z, q.y},
                  {q.y, q.z, q.w, -q.x},
                  {q.z, -q.y, q.x, q.w}};
}

std::size_t block_dim(ScalarAlgebra algebra) {
    switch (algebra) {
        case ScalarAlgebra::Real: return 1;
        case ScalarAlgebra::Complex: return 2;
        case ScalarAlgebra::Quaternion: return 4;
    }
    throw ValidationError("block_dim: unknown algebra tag");
}

BlockEmbedding embedding_info(ScalarAlgebra algebra, std::size_t n) {
    return BlockEmbedding{algebra, n, n * block_dim(algebra)};
}

ComplexWaveFunction::ComplexWaveFunction(std::vector<std::complex<double>> amplitudes)
    : a_(std::move(amplitudes)) {
    if (a_.empty())
        throw ValidationError("ComplexWaveFunction: needs at least one amplitude");
    double norm_sq = 0.0;
    for (const auto& v : a_) norm_sq += std::norm(v);
    if (std::abs(norm_sq - 1.0) > kNormTol)
        throw ValidationError("ComplexWaveFunction: squared norm is " +
                              std::to_string(norm_sq) + ", not 1");
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        const double norm = std::sqrt(norm_sq);
        for (auto& v : a_) v /= norm;
    }
}

QuaternionWaveFunction::QuaternionWaveFunction(std::vector<Quaternion> amplitudes)
    : a_(std::move(amplitudes)) {
    if (a_.empty())
        throw ValidationError("QuaternionWaveFunction: needs at least one amplitude");
    double norm_sq = 0.0;
    for (const auto& v : a_) norm_sq += v.norm_sq();
    if (std::abs(norm_sq - 1.0) > kNormTol)
        throw ValidationError("QuaternionWaveFunction: squared norm is " +
                              std::to_string(norm_sq) + ", not 1");
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        const double norm = std::sqrt(norm_sq);
        for (auto& v : a_) {
            v.w /= norm;
            v.x /= norm;
            v.y /= norm;
            v.z /= norm;
        }
    }
}

WaveFunction embed_real(const ComplexWaveFunction& psi) {
    std::vector<double> r;
    r.reserve(2 * psi.size());
    for (const auto& v : psi.amplitudes()) {
        r.push_back(v.real());
        r.push_back(v.imag());
    }
    return WaveFunction(std::move(r));
}

WaveFunction embed_real(const QuaternionWaveFunction& psi) {
    std::vector<double> r;
    r.reserve(4 * psi.size());
    for (const auto& v : psi.amplitudes()) {
        r.push_back(v.w);
        r.push_back(v.x);
        r.push_back(v.y);
        r.push_back(v.z);
    }
    return WaveFunction(std::move(r));
}

ProbDist marginal_born(const ComplexWaveFunction& psi) {
    std::vector<double> p(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) p[i] = std::norm(psi.amplitudes()[i]);
    return ProbDist(std::move(p));
}

ProbDist marginal_born(const QuaternionWaveFunction& psi) {
    std::vector<double> p(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) p[i] = psi.amplitudes()[i].norm_sq();
    return ProbDist(std::move(p));
}

bool collapse_diagonalizes(const QuaternionWaveFunction& psi) {
    const std::size_t n = psi.size();
    const ProbDist marginal = marginal_born(psi);
    for (std::size_t i = 0; i < n; ++i) {
        // Diagonal entry of the quaternionic projector v v^dagger.
        const Quaternion q = psi.amplitudes()[i];
        const Quaternion d = q * q.conjugate();
        if (std::abs(d.x) > kRealTol || std::abs(d.y) > kRealTol || std::abs(d.z) > kRealTol)
            return false;
        // Its embedded 4x4 block must be a multiple of the identity whose
        // normalized trace is the marginal probability.
        const Matrix block = left_matrix(d);
        if (max_abs_diff(block, Matrix::identity(4) * d.w) > kRealTol) return false;
        if (std::abs(block.trace() / 4.0 - marginal.values()[i]) > kRealTol) return false;
    }
    return true;
}

}  // namespace psiparam
