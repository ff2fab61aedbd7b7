#pragma once

#include <cstddef>
#include <vector>

#include "psiparam/simplex.hpp"
#include "psiparam/sphere.hpp"

namespace psiparam {

/// Finite random walk: T steps, each going up with its own probability q.
/// T is capped at 20 so the 2^T complete paths stay enumerable.
class WalkSpec {
public:
    WalkSpec(std::size_t steps, double q);
    explicit WalkSpec(std::vector<double> q);

    std::size_t steps() const { return q_.size(); }
    std::size_t path_count() const { return std::size_t{1} << q_.size(); }
    const std::vector<double>& step_probs() const { return q_; }

private:
    std::vector<double> q_;
};

/// Distribution over the 2^T complete paths in lexicographic order over
/// step outcomes, down = 0; path index bit T-1-t holds step t.
struct PathDistribution {
    ProbDist dist;
    std::size_t steps;
};

/// Path probabilities as products of per-step probabilities. OpenMP across
/// path indices; _serial is the reference kept for testing.
PathDistribution enumerate_paths(const WalkSpec& spec);
PathDistribution enumerate_paths_serial(const WalkSpec& spec);

/// Square-root parametrization of the complete-path distribution.
WaveFunction path_wavefunction(const WalkSpec& spec);

/// Position distribution after t steps, positions -t..+t in ascending
/// order. Computed both by grouping Born probabilities of complete paths
/// and by the forward Markov recursion; the two must agree within 1e-12.
ProbDist marginal_at(const WalkSpec& spec, std::size_t t);

}  // namespace psiparam
