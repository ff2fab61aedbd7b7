#include "psiparam/paths.hpp"

#include <cmath>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr std::size_t kMaxSteps = 20;
constexpr double kMarginalTol = 1e-12;

void validate_probs(const std::vector<double>& q) {
    if (q.empty() || q.size() > kMaxSteps)
        throw RangeError("WalkSpec: step count must be between 1 and " +
                         std::to_string(kMaxSteps));
    for (double v : q)
        if (!(v >= 0.0 && v <= 1.0))
            throw ValidationError("WalkSpec: step probability outside [0,1]");
}

double path_probability(std::size_t idx, const std::vector<double>& q) {
    const std::size_t t_count = q.size();
    double prob = 1.0;
    for (std::size_t t = 0; t < t_count; ++t) {
        const bool up = (idx >> (t_count - 1 - t)) & 1u;
        prob *= up ? q[t] : 1.0 - q[t];
    }
    return prob;
}
}  // namespace

WalkSpec::WalkSpec(std::size_t steps, double q) : q_(steps, q) {
    validate_probs(q_);
}

WalkSpec::WalkSpec(std::vector<double> q) : q_(std::move(q)) {
    validate_probs(q_);
}

PathDistribution enumerate_paths(const WalkSpec& spec) {
    const std::vector<double>& q = spec.step_probs();
    std::vector<double> p(spec.path_count());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = path_probability(static_cast<std::size_t>(i), q);
    return PathDistribution{ProbDist(std::move(p)), spec.steps()};
}

PathDistribution enumerate_paths_serial(const WalkSpec& spec) {
    const std::vector<double>& q = spec.step_probs();
    std::vector<double> p(spec.path_count());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = path_probability(i, q);
    return PathDistribution{ProbDist(std::move(p)), spec.steps()};
}

WaveFunction path_wavefunction(const WalkSpec& spec) {
    return sqrt_encode(enumerate_paths(spec).dist);
}

ProbDist marginal_at(const WalkSpec& spec, std::size_t t) {
    const std::size_t t_count = spec.steps();
    if (t > t_count) throw RangeError("marginal_at: step index out of range");

    // Route 1: group Born probabilities of complete paths by the position
    // reached after t steps. Position -t + 2 * (number of up-steps).
    const ProbDist paths = born_decode(path_wavefunction(spec));
    std::vector<double> grouped(t + 1, 0.0);
    for (std::size_t idx = 0; idx < paths.size(); ++idx) {
        std::size_t ups = 0;
        for (std::size_t step = 0; step < t; ++step)
            ups += (idx >> (t_count - 1 - step)) & 1u;
        grouped[ups] += paths.values()[idx];
    }

    // Route 2: forward recursion of the Markov chain over positions.
    std::vector<double> forward(t + 1, 0.0);
    forward[0] = 1.0;
    for (std::size_t step = 0; step < t; ++step) {
        std::vector<double> next(t + 1, 0.0);
        for (std::size_t k = 0; k <= step; ++k) {
            next[k] += forward[k] * (1.0 - spec.step_probs()[step]);
            next[k + 1] += forward[k] * spec.step_probs()[step];
        }
        forward = std::move(next);
    }

    for (std::size_t k = 0; k <= t; ++k)
        if (std::abs(grouped[k] - forward[k]) > kMarginalTol)
            throw ValidationError("marginal_at: path grouping and Markov recursion disagree");
    return ProbDist(std::move(forward));
}

}  // namespace psiparam
