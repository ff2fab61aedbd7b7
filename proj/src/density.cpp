#include "psiparam/density.hpp"

#include <cmath>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr double kSelfAdjointTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdFloor = -1e-10;
constexpr std::size_t kPsdCheckMaxDim = 32;
}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionError("DensityMatrix: matrix not square");
    if (!is_symmetric(m_, kSelfAdjointTol))
        throw ValidationError("DensityMatrix: matrix not self-adjoint");
    if (std::abs(m_.trace() - 1.0) > kTraceTol)
        throw ValidationError("DensityMatrix: trace is " + std::to_string(m_.trace()) +
                              ", not 1");
    if (m_.rows() <= kPsdCheckMaxDim) {
        for (double ev : symmetric_eigenvalues(m_))
            if (ev < kPsdFloor)
                throw ValidationError("DensityMatrix: negative eigenvalue " +
                                      std::to_string(ev));
    }
}

ImaginaryUnitOperator::ImaginaryUnitOperator(const WaveFunction& l, const WaveFunction& phi)
    : m_(outer(l.amplitudes(), phi.amplitudes())) {
    if (l.size() != phi.size())
        throw DimensionError("ImaginaryUnitOperator: vectors of unequal dimension");
    m_ -= outer(phi.amplitudes(), l.amplitudes());
}

ImaginaryUnitOperator::ImaginaryUnitOperator(Matrix m) : m_(std::move(m)) {
    if (!is_antisymmetric(m_, kSelfAdjointTol))
        throw ValidationError("ImaginaryUnitOperator: matrix not antisymmetric");
}

DensityMatrix pure_density(const WaveFunction& psi) {
    return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix collapse(const DensityMatrix& rho) {
    return DensityMatrix(Matrix::diagonal(rho.matrix().diag()));
}

EulerDecomposition2D euler_decompose_2d(const WaveFunction& psi) {
    if (psi.size() != 2)
        throw DimensionError("euler_decompose_2d: wave-function must be 2-dimensional");
    // psi = (cos t, sin t); the double angle comes straight from the components.
    const double phase_cos = psi[0] * psi[0] - psi[1] * psi[1];
    const double phase_sin = 2.0 * psi[0] * psi[1];
    return EulerDecomposition2D{
        Matrix::identity(2) * 0.5,
        Matrix{{0.5, 0.0}, {0.0, -0.5}},
        phase_cos,
        phase_sin,
        ImaginaryUnitOperator(Matrix{{0.0, 1.0}, {-1.0, 0.0}}),
    };
}

Matrix reassemble(const EulerDecomposition2D& d) {
    return d.mean + d.axis * d.phase_cos + (d.axis * d.j.matrix()) * d.phase_sin;
}

ProbDist recursive_collapse(const WaveFunction& psi) {
    const std::size_t n = psi.size();
    // Tail norms T_k = sum_{j>=k} psi_j^2 drive the level angles.
    std::vector<double> tail(n + 2, 0.0);
    for (std::size_t k = n; k >= 1; --k) tail[k] = tail[k + 1] + psi[k - 1] * psi[k - 1];

    // Every collapsed level operator is diagonal, so only diagonals are
    // carried: level n replaces the tail block by
    // cos^2 l_n l_n^T + sin^2 (collapsed tail projector).
    std::vector<double> diag(n, 0.0);
    diag[n - 1] = 1.0;
    for (std::size_t level = n - 1; level >= 1; --level) {
        const double theta = std::atan2(std::sqrt(tail[level + 1]), std::abs(psi[level - 1]));
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = level; k < n; ++k) diag[k] *= s * s;
        diag[level - 1] = c * c;
    }
    return ProbDist(std::move(diag));
}

}  // namespace psiparam
