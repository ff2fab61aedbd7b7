#include "psiparam/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psiparam/error.hpp"

namespace psiparam {

namespace {
constexpr double kSumTol = 1e-9;
constexpr double kProjectionTol = 1e-12;
}  // namespace

ProbDist::ProbDist(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw ValidationError("ProbDist: needs at least one outcome");
    double sum = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) throw ValidationError("ProbDist: negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw ValidationError("ProbDist: probabilities sum to " + std::to_string(sum) +
                              ", not 1");
    // Entries already summing to 1 within the invariant are kept as given;
    // renormalization only touches inputs in the slack band.
    if (std::abs(sum - 1.0) > 1e-12)
        for (double& v : p_) v /= sum;
}

double ProbDist::prob(std::size_t n) const {
    if (n < 1 || n > p_.size()) throw RangeError("ProbDist: outcome index out of range");
    return p_[n - 1];
}

Event::Event(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 1)
        throw RangeError("Event: outcome indices are 1-based");
}

Event Event::full(std::size_t dim) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i + 1;
    return Event(std::move(all));
}

Event Event::intersect(const Event& other) const {
    std::vector<std::size_t> out;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(out));
    return Event(std::move(out));
}

Event Event::unite(const Event& other) const {
    std::vector<std::size_t> out;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(out));
    return Event(std::move(out));
}

bool Event::disjoint(const Event& other) const {
    return intersect(other).empty();
}

Projection::Projection(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionError("Projection: matrix not square");
    if (!is_symmetric(m_, kProjectionTol))
        throw ValidationError("Projection: matrix not symmetric");
    if (max_abs_diff(m_ * m_, m_) > kProjectionTol)
        throw ValidationError("Projection: matrix not idempotent");
}

Projection event_projection(const Event& event, std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t idx : event.indices()) {
        if (idx > dim) throw RangeError("event_projection: outcome index exceeds dimension");
        m(idx - 1, idx - 1) = 1.0;
    }
    return Projection(std::move(m));
}

double prob_of_event(const ProbDist& dist, const Event& event) {
    double sum = 0.0;
    for (std::size_t idx : event.indices()) sum += dist.prob(idx);
    return sum;
}

}  // namespace psiparam
