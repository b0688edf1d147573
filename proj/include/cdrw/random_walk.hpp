#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdrw/graph.hpp"

namespace cdrw {

// Exact simple-random-walk distribution after `step` steps from `source`.
// Stored dense; support is always inside the radius-`step` ball of source.
struct ProbVector {
    std::vector<double> values;
    std::size_t step = 0;
    Vertex source = 0;

    static ProbVector delta(const Graph& g, Vertex s);
    double total_mass() const;
};

// One exact propagation step: p'(u) = sum over neighbors v of p(v)/d(v).
// Throws if positive mass sits on an isolated vertex. A nonzero laziness
// keeps that fraction of mass in place (off by default; bipartite inputs are
// reported as not-mixed rather than silently lazified).
ProbVector walk_step(const Graph& g, const ProbVector& p, double laziness = 0.0);

// Copy of p that is zero outside s. The result need not sum to 1.
std::vector<double> restrict_to(const ProbVector& p, std::span<const Vertex> s);

// L1 distance between p and the stationary distribution d(v)/2m.
double l1_to_stationary(const Graph& g, const ProbVector& p);

// Smallest t <= max_steps with ||p_t - pi||_1 < epsilon, or nullopt if the
// walk has not mixed within the budget (e.g. bipartite oscillation).
std::optional<std::size_t> mixing_time(const Graph& g, Vertex s, double epsilon,
                                       std::size_t max_steps, double laziness = 0.0);

// Power-iteration estimate of the second largest transition-matrix eigenvalue
// magnitude, via the symmetric normalized adjacency with the stationary
// component deflated out. Test-harness quality, not a certified bound.
double estimate_lambda2(const Graph& g, std::size_t iterations, std::uint64_t seed);

}  // namespace cdrw
