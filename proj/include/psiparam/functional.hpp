#pragma once

#include <cstddef>
#include <optional>

#include "psiparam/density.hpp"
#include "psiparam/matrix.hpp"
#include "psiparam/transform.hpp"

namespace psiparam {

/// Expectation functional of a measured ensemble. The state rho assigns
/// probabilities to diagonal operators; an optional transform U relocates
/// the measurement basis, E_U(D) = E(U D U^T). Off-diagonal content never
/// contributes: a general operator is reduced to its diagonal first, so
/// null-diagonal operators evaluate to exactly zero.
class ExpectationFunctional {
public:
    explicit ExpectationFunctional(DensityMatrix rho,
                                   std::optional<OrthogonalTransform> u = std::nullopt);

    double evaluate(const Matrix& op) const;

    const DensityMatrix& rho() const { return rho_; }

private:
    DensityMatrix rho_;
    std::optional<OrthogonalTransform> u_;
};

struct GleasonSearchResult {
    double theta_best;
    double residual;
};

/// Residual of the 2-state pure state (cos theta, sin theta) against the
/// two target traces: max(|Tr(rho diag(1,0)) - a|, |Tr(rho P+) - b|) with
/// P+ = [[1,1],[1,1]]/2.
double gleason_residual_at(double theta, double target_a, double target_b);

/// Scans grid equally spaced pure states over [0, 2pi) and returns the
/// minimizer (smallest theta on exact ties). Grid resolution must be at
/// least 1000. OpenMP across grid points with an order-independent
/// reduction; _serial is the reference kept for testing.
GleasonSearchResult gleason_pure_search(double target_a, double target_b, std::size_t grid);
GleasonSearchResult gleason_pure_search_serial(double target_a, double target_b,
                                               std::size_t grid);

/// The maximally mixed 2-state density I/2, which meets both trace targets
/// of 1/2 that no pure state can.
DensityMatrix gleason_mixed_witness();

}  // namespace psiparam
