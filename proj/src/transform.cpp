#include "psiparam/transform.hpp"

#include <cmath>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr double kOrthogonalTol = 1e-10;
constexpr double kStochasticTol = 1e-12;
constexpr double kCommutatorTol = 1e-10;
constexpr double kGaugeTol = 1e-10;
}  // namespace

OrthogonalTransform::OrthogonalTransform(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionError("OrthogonalTransform: matrix not square");
    const Matrix gram = m_.transposed() * m_;
    if (max_abs_diff(gram, Matrix::identity(m_.rows())) > kOrthogonalTol)
        throw ValidationError("OrthogonalTransform: U^T U deviates from identity");
}

OrthogonalTransform OrthogonalTransform::permutation(const std::vector<std::size_t>& sigma) {
    const std::size_t n = sigma.size();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (sigma[j] < 1 || sigma[j] > n)
            throw RangeError("permutation: target index out of range");
        m(sigma[j] - 1, j) = 1.0;
    }
    return OrthogonalTransform(std::move(m));
}

StochasticMatrix::StochasticMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionError("StochasticMatrix: matrix not square");
    for (std::size_t j = 0; j < m_.cols(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            if (m_(i, j) < 0.0)
                throw ValidationError("StochasticMatrix: negative entry");
            col += m_(i, j);
        }
        if (std::abs(col - 1.0) > kStochasticTol)
            throw ValidationError("StochasticMatrix: column " + std::to_string(j + 1) +
                                  " sums to " + std::to_string(col));
    }
}

WaveFunction apply_to_wavefunction(const OrthogonalTransform& u, const WaveFunction& psi) {
    if (u.dim() != psi.size())
        throw DimensionError("apply_to_wavefunction: dimension mismatch");
    return WaveFunction(u.matrix() * psi.amplitudes());
}

OrthogonalTransform clock_rotation(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return OrthogonalTransform(Matrix{{c, -s}, {s, c}});
}

StochasticMatrix classical_map(double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a);
    const double cb = std::cos(b), sb = std::sin(b);
    return StochasticMatrix(Matrix{{ca * ca, cb * cb}, {sa * sa, sb * sb}});
}

DeterminismVerdict is_deterministic(const OrthogonalTransform& u) {
    const std::size_t n = u.dim();
    const Matrix& m = u.matrix();
    const Matrix mt = m.transposed();
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> e(n, 0.0);
        e[k] = 1.0;
        const Matrix p = Matrix::diagonal(e);
        const Matrix conj = m * p * mt;  // U P U^T
        if (max_abs_diff(p * conj, conj * p) > kCommutatorTol)
            return DeterminismVerdict{false, k + 1};
    }
    return DeterminismVerdict{true, std::nullopt};
}

bool gauge_equivalent(const WaveFunction& psi, const WaveFunction& phi) {
    if (psi.size() != phi.size())
        throw DimensionError("gauge_equivalent: dimension mismatch");
    for (std::size_t i = 0; i < psi.size(); ++i)
        if (std::abs(psi[i] * psi[i] - phi[i] * phi[i]) > kGaugeTol) return false;
    return true;
}

}  // namespace psiparam
