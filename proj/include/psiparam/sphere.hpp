#pragma once

#include <cstddef>
#include <vector>

#include "psiparam/simplex.hpp"

namespace psiparam {

/// N-1 hyperspherical angles driving the recursion v_n = c_n l_n + s_n v_{n+1}.
/// Arbitrary real angles are accepted on input; everything this library
/// produces is canonical, meaning each angle lies in [0, pi/2] so that all
/// cosines and sines are non-negative.
class EulerAngles {
public:
    EulerAngles() = default;  // dimension 1, no angles
    explicit EulerAngles(std::vector<double> theta) : theta_(std::move(theta)) {}

    const std::vector<double>& theta() const { return theta_; }
    std::size_t dimension() const { return theta_.size() + 1; }
    bool is_canonical() const;

private:
    std::vector<double> theta_;
};

/// Real unit vector on the hypersphere. Construction requires the squared
/// amplitudes to sum to 1 within 1e-9 and renormalizes exactly.
class WaveFunction {
public:
    explicit WaveFunction(std::vector<double> amplitudes);

    std::size_t size() const { return a_.size(); }
    const std::vector<double>& amplitudes() const { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }  // 0-based

private:
    std::vector<double> a_;
};

/// Canonical angles for a distribution: cos^2(theta_n) is the conditional
/// probability of outcome n given outcome n or above. Computed from square
/// roots of tail sums via atan2, which stays accurate for long tails of
/// tiny probabilities. A zero tail yields theta_n = 0.
EulerAngles encode(const ProbDist& dist);

/// Amplitudes a_n = cos(theta_n) * prod_{k<n} sin(theta_k), with the last
/// amplitude the full sine product. Unit norm for any real angles.
WaveFunction angles_to_wavefunction(const EulerAngles& angles);

/// Born rule: p_n = a_n^2.
ProbDist born_decode(const WaveFunction& psi);

/// Componentwise square root of the probabilities; agrees with the angle
/// route on the canonical branch.
WaveFunction sqrt_encode(const ProbDist& dist);

/// Factors of the conditional-probability chain for outcome n (1-based):
/// the n-1 survival factors P(k+1 or above | k or above) followed by
/// P(n | n or above). Their product is p_n. Throws DegenerateConditional
/// when a conditional against a zero-probability tail is requested.
std::vector<double> conditional_chain(const ProbDist& dist, std::size_t n);

/// Max over the batch of the inf-norm error of decode(encode(p)) vs p.
/// OpenMP across points; _serial is the reference kept for testing.
double roundtrip_max_error(const std::vector<ProbDist>& dists);
double roundtrip_max_error_serial(const std::vector<ProbDist>& dists);

}  // namespace psiparam
