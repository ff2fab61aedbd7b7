#include "psiparam/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr double kNormTol = 1e-9;

// Tail sums T_n = sum_{k>=n} p_k, accumulated backwards; T[0] is unused
// padding so indices match the 1-based outcome convention.
std::vector<double> tail_sums(const std::vector<double>& p) {
    std::vector<double> tail(p.size() + 2, 0.0);
    for (std::size_t n = p.size(); n >= 1; --n) tail[n] = tail[n + 1] + p[n - 1];
    return tail;
}
}  // namespace

bool EulerAngles::is_canonical() const {
    for (double t : theta_)
        if (t < 0.0 || t > std::numbers::pi / 2.0) return false;
    return true;
}

WaveFunction::WaveFunction(std::vector<double> amplitudes) : a_(std::move(amplitudes)) {
    if (a_.empty()) throw ValidationError("WaveFunction: needs at least one amplitude");
    double norm_sq = 0.0;
    for (double v : a_) norm_sq += v * v;
    if (std::abs(norm_sq - 1.0) > kNormTol)
        throw ValidationError("WaveFunction: squared norm is " + std::to_string(norm_sq) +
                              ", not 1");
    // Amplitudes already meeting the invariant are stored untouched;
    // renormalization is reserved for inputs in the slack band.
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        const double norm = std::sqrt(norm_sq);
        for (double& v : a_) v /= norm;
    }
}

EulerAngles encode(const ProbDist& dist) {
    const std::vector<double>& p = dist.values();
    const std::vector<double> tail = tail_sums(p);
    std::vector<double> theta(p.size() - 1);
    for (std::size_t n = 1; n < p.size(); ++n) {
        // atan2(0, 0) = 0 covers the zero-tail convention.
        theta[n - 1] = std::atan2(std::sqrt(tail[n + 1]), std::sqrt(p[n - 1]));
    }
    return EulerAngles(std::move(theta));
}

WaveFunction angles_to_wavefunction(const EulerAngles& angles) {
    const std::vector<double>& theta = angles.theta();
    std::vector<double> a(theta.size() + 1);
    double sines = 1.0;
    for (std::size_t n = 0; n < theta.size(); ++n) {
        a[n] = std::cos(theta[n]) * sines;
        sines *= std::sin(theta[n]);
    }
    a.back() = sines;
    return WaveFunction(std::move(a));
}

ProbDist born_decode(const WaveFunction& psi) {
    double norm_sq = 0.0;
    for (double v : psi.amplitudes()) norm_sq += v * v;
    if (std::abs(norm_sq - 1.0) > kNormTol)
        throw ValidationError("born_decode: wave-function is not normalized");
    std::vector<double> p(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) p[i] = psi[i] * psi[i];
    return ProbDist(std::move(p));
}

WaveFunction sqrt_encode(const ProbDist& dist) {
    std::vector<double> a(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) a[i] = std::sqrt(dist.values()[i]);
    return WaveFunction(std::move(a));
}

std::vector<double> conditional_chain(const ProbDist& dist, std::size_t n) {
    if (n < 1 || n > dist.size())
        throw RangeError("conditional_chain: outcome index out of range");
    const std::vector<double>& p = dist.values();
    const std::vector<double> tail = tail_sums(p);
    std::vector<double> factors;
    factors.reserve(n);
    for (std::size_t k = 1; k < n; ++k) {
        if (tail[k] == 0.0)
            throw DegenerateConditional("conditional_chain: zero-probability tail at " +
                                        std::to_string(k));
        factors.push_back(tail[k + 1] / tail[k]);
    }
    if (tail[n] == 0.0)
        throw DegenerateConditional("conditional_chain: zero-probability tail at " +
                                    std::to_string(n));
    factors.push_back(p[n - 1] / tail[n]);
    return factors;
}

namespace {
double roundtrip_error_one(const ProbDist& dist) {
    const ProbDist back = born_decode(angles_to_wavefunction(encode(dist)));
    double err = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        err = std::max(err, std::abs(back.values()[i] - dist.values()[i]));
    return err;
}
}  // namespace

double roundtrip_max_error(const std::vector<ProbDist>& dists) {
    double err = 0.0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dists.size());
#pragma omp parallel for reduction(max : err) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        err = std::max(err, roundtrip_error_one(dists[static_cast<std::size_t>(i)]));
    return err;
}

double roundtrip_max_error_serial(const std::vector<ProbDist>& dists) {
    double err = 0.0;
    for (const ProbDist& d : dists) err = std::max(err, roundtrip_error_one(d));
    return err;
}

}  // namespace psiparam
