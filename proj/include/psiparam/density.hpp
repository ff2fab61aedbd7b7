#pragma once

#include <cstddef>

#include "psiparam/matrix.hpp"
#include "psiparam/sphere.hpp"

namespace psiparam {

/// Real symmetric trace-1 matrix. Positive semidefiniteness is verified by
/// eigenvalue computation only up to dimension 32; beyond that, symmetry and
/// trace are the enforced invariants.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m);
    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    Matrix m_;
};

/// Antisymmetric operator l phi^T - phi l^T acting as the imaginary unit
/// in the 2-plane spanned by orthonormal {l, phi}: its square is minus the
/// projector onto that plane.
class ImaginaryUnitOperator {
public:
    ImaginaryUnitOperator(const WaveFunction& l, const WaveFunction& phi);
    explicit ImaginaryUnitOperator(Matrix m);  // validates antisymmetry
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

/// Rank-1 projector psi psi^T.
DensityMatrix pure_density(const WaveFunction& psi);

/// Measurement in the partition basis: zero the off-diagonal entries,
/// keep the diagonal. Idempotent and trace-preserving. Collapse in another
/// basis is expressed by conjugating with an orthogonal transform first.
DensityMatrix collapse(const DensityMatrix& rho);

/// The 2-state density matrix psi psi^T written as
///   mean + axis * (phase_cos + J * phase_sin)
/// with mean = I/2, axis = diag(1/2, -1/2), J = [[0,1],[-1,0]] and the
/// phases equal to cos(2t), sin(2t) for psi = (cos t, sin t).
struct EulerDecomposition2D {
    Matrix mean;
    Matrix axis;
    double phase_cos;
    double phase_sin;
    ImaginaryUnitOperator j;
};

EulerDecomposition2D euler_decompose_2d(const WaveFunction& psi);

/// mean + axis * phase_cos + (axis * J) * phase_sin
Matrix reassemble(const EulerDecomposition2D& d);

/// Measurement as a chain of 2-state collapses: at level n the projector
/// onto v_n = c_n l_n + s_n v_{n+1} loses its cross terms, leaving
/// c_n^2 l_n l_n^T + s_n^2 (collapsed projector of v_{n+1}). The diagonal
/// that survives the full recursion is the Born distribution.
ProbDist recursive_collapse(const WaveFunction& psi);

}  // namespace psiparam
