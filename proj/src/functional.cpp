#include "psiparam/functional.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "psiparam/error.hpp"

namespace psiparam {

ExpectationFunctional::ExpectationFunctional(DensityMatrix rho,
                                             std::optional<OrthogonalTransform> u)
    : rho_(std::move(rho)), u_(std::move(u)) {
    if (u_ && u_->dim() != rho_.dim())
        throw DimensionError("ExpectationFunctional: transform and state dimensions differ");
}

double ExpectationFunctional::evaluate(const Matrix& op) const {
    if (!op.is_square() || op.rows() != rho_.dim())
        throw DimensionError("evaluate: operator dimension mismatch");
    const Matrix d = Matrix::diagonal(op.diag());
    const Matrix measured = u_ ? u_->matrix() * d * u_->matrix().transposed() : d;
    return (rho_.matrix() * measured).trace();
}

double gleason_residual_at(double theta, double target_a, double target_b) {
    const double c = std::cos(theta), s = std::sin(theta);
    // Tr(rho diag(1,0)) = cos^2; Tr(rho P+) = (cos + sin)^2 / 2.
    const double trace_a = c * c;
    const double trace_b = 0.5 * (c + s) * (c + s);
    return std::max(std::abs(trace_a - target_a), std::abs(trace_b - target_b));
}

namespace {
struct Best {
    double residual;
    std::size_t index;

    bool better_than(const Best& other) const {
        return residual < other.residual ||
               (residual == other.residual && index < other.index);
    }
};
}  // namespace

GleasonSearchResult gleason_pure_search(double target_a, double target_b, std::size_t grid) {
    if (grid < 1000) throw RangeError("gleason_pure_search: grid resolution below 1000");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
    Best best{gleason_residual_at(0.0, target_a, target_b), 0};
#pragma omp parallel
    {
        Best local = best;
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(grid);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t k = 1; k < n; ++k) {
            const std::size_t idx = static_cast<std::size_t>(k);
            const Best candidate{
                gleason_residual_at(static_cast<double>(idx) * step, target_a, target_b),
                idx};
            if (candidate.better_than(local)) local = candidate;
        }
        // Merge order does not matter: the combined result is the true
        // lexicographic minimum over (residual, index).
#pragma omp critical
        if (local.better_than(best)) best = local;
    }
    return GleasonSearchResult{static_cast<double>(best.index) * step, best.residual};
}

GleasonSearchResult gleason_pure_search_serial(double target_a, double target_b,
                                               std::size_t grid) {
    if (grid < 1000) throw RangeError("gleason_pure_search: grid resolution below 1000");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
    Best best{gleason_residual_at(0.0, target_a, target_b), 0};
    for (std::size_t k = 1; k < grid; ++k) {
        const Best candidate{gleason_residual_at(static_cast<double>(k) * step, target_a,
                                                 target_b),
                             k};
        if (candidate.better_than(best)) best = candidate;
    }
    return GleasonSearchResult{static_cast<double>(best.index) * step, best.residual};
}

DensityMatrix gleason_mixed_witness() {
    return DensityMatrix(Matrix{{0.5, 0.0}, {0.0, 0.5}});
}

}  // namespace psiparam
