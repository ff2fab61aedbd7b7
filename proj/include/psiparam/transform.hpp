#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psiparam/matrix.hpp"
#include "psiparam/sphere.hpp"

namespace psiparam {

/// Square matrix with U^T U = I within 1e-10.
class OrthogonalTransform {
public:
    explicit OrthogonalTransform(Matrix m);

    /// Permutation matrix sending basis vector n to sigma[n-1] (1-based).
    static OrthogonalTransform permutation(const std::vector<std::size_t>& sigma);

    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    Matrix m_;
};

/// Column-stochastic real matrix: entries non-negative, columns sum to 1
/// within 1e-12.
class StochasticMatrix {
public:
    explicit StochasticMatrix(Matrix m);
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

/// U psi, renormalized to the construction tolerance.
WaveFunction apply_to_wavefunction(const OrthogonalTransform& u, const WaveFunction& psi);

/// 2-state rotation by angle a; advances the probability clock, and
/// composes additively: clock_rotation(a) clock_rotation(b) = clock_rotation(a+b).
OrthogonalTransform clock_rotation(double a);

/// M(a,b) = [[cos^2 a, cos^2 b], [sin^2 a, sin^2 b]], the most general
/// linear map preserving 2-state distributions. Mixing choices of a, b
/// make it singular.
StochasticMatrix classical_map(double a, double b);

struct DeterminismVerdict {
    bool deterministic;
    std::optional<std::size_t> witness;  // 1-based outcome whose projection fails
};

/// A transform is deterministic iff every event projection P commutes with
/// U P U^T. Elementary projections suffice: every event projection is a sum
/// of them, and sums of commuting terms commute. Commutators are accepted
/// up to 1e-10 to absorb matrix-product roundoff.
DeterminismVerdict is_deterministic(const OrthogonalTransform& u);

/// True when the two wave-functions assign the same squared component to
/// every basis vector, i.e. they parametrize the same distribution and the
/// same elementary-event probabilities.
bool gauge_equivalent(const WaveFunction& psi, const WaveFunction& phi);

}  // namespace psiparam
