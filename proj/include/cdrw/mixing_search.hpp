#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "cdrw/graph.hpp"
#include "cdrw/random_walk.hpp"

namespace cdrw {

// Mixing test threshold and candidate-size growth factor of the local
// mixing-set search.
inline constexpr double kMixingEpsilon = 1.0 / (2.0 * std::numbers::e);
inline constexpr double kScheduleGrowth = 1.0 + 1.0 / (8.0 * std::numbers::e);

struct MixingSearchConfig {
    double epsilon_threshold = kMixingEpsilon;
    double growth_factor = kScheduleGrowth;
    std::size_t initial_size = 0;  // 0: use ceil(log2 n)
    double tie_break_scale = 1e-12;

    std::size_t resolved_initial_size(std::size_t n) const;
};

struct MixingSetResult {
    std::vector<Vertex> members;  // sorted by id
    std::size_t size = 0;
    std::size_t step = 0;  // walk length the set was found at
    double score_sum = 0.0;
};

struct Selection {
    std::vector<Vertex> members;  // sorted by id
    double score_sum = 0.0;       // sum of the original (unjittered) scores
};

// Per-vertex deviation from the average-volume target:
// x_u = |p(u) - d(u) / ((2m/n) * candidate_size)|.
std::vector<double> deviation_scores(const Graph& g, const ProbVector& p,
                                     std::size_t candidate_size);

// Tie-break rule: when duplicate scores exist among the candidates, every
// candidate score gets seeded uniform jitter in [0, scale * g) where g is the
// smallest positive gap between distinct scores, which cannot reorder any
// distinct pair. Returns empty when no duplicates exist (scores already
// distinct). Exposed so the in-process and simulated selections share it.
std::vector<double> tie_jittered_scores(std::span<const double> scores,
                                        std::span<const Vertex> candidates, std::uint64_t tie_seed,
                                        double scale);

// The k candidates of smallest score (after tie jitter), with the minimum
// achievable original-score sum. Deterministic per tie_seed.
Selection select_smallest(std::span<const double> scores, std::size_t k, std::uint64_t tie_seed,
                          double tie_break_scale = 1e-12);
Selection select_smallest_among(std::span<const double> scores, std::span<const Vertex> candidates,
                                std::size_t k, std::uint64_t tie_seed, double tie_break_scale);

// Candidate-size schedule initial, ceil(initial*growth), ... capped to end
// exactly at n_cap; strictly increasing (repeats after rounding bump by 1).
std::vector<std::size_t> candidate_sizes(std::size_t initial, std::size_t n_cap, double growth);

// Scans the schedule at the current walk length and returns the largest
// candidate size whose k smallest deviation scores sum below the threshold,
// or nullopt when no size passes.
std::optional<MixingSetResult> largest_mixing_set(const Graph& g, const ProbVector& p,
                                                  const MixingSearchConfig& cfg,
                                                  std::uint64_t jitter_seed);

}  // namespace cdrw
