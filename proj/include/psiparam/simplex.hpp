#pragma once

#include <cstddef>
#include <vector>

#include "psiparam/matrix.hpp"

namespace psiparam {

/// Point on the probability simplex over N outcomes. Outcomes are 1-based
/// in every interface that names an outcome; storage is a plain 0-based
/// vector reachable through values().
///
/// Construction requires the entries to be non-negative and to sum to 1
/// within 1e-9; sums that close are renormalized exactly, anything further
/// off is rejected rather than silently fixed.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> p);

    std::size_t size() const { return p_.size(); }
    const std::vector<double>& values() const { return p_; }

    /// Probability of outcome n (1-based).
    double prob(std::size_t n) const;

private:
    std::vector<double> p_;
};

/// Event as a sorted set of 1-based outcome indices. Default-constructed
/// is the impossible (empty) event.
class Event {
public:
    Event() = default;
    explicit Event(std::vector<std::size_t> indices);

    static Event full(std::size_t dim);

    const std::vector<std::size_t>& indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }

    Event intersect(const Event& other) const;
    Event unite(const Event& other) const;
    bool disjoint(const Event& other) const;

private:
    std::vector<std::size_t> indices_;  // sorted, unique, all >= 1
};

/// Real symmetric idempotent matrix; construction checks both properties
/// entrywise within 1e-12.
class Projection {
public:
    explicit Projection(Matrix m);
    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    Matrix m_;
};

/// Diagonal 0/1 projection selecting the event's outcomes.
/// Event intersection maps to matrix product and disjoint union to sum.
Projection event_projection(const Event& event, std::size_t dim);

/// Sum of the probabilities of the event's outcomes.
double prob_of_event(const ProbDist& dist, const Event& event);

}  // namespace psiparam
