#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdrw/cdrw.hpp"
#include "cdrw/graph.hpp"

namespace cdrw {

struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
};

// Inputs are sorted unique vertex sets. nullopt when a side is empty and the
// metric is undefined (distinct from a genuine 0).
std::optional<PrecisionRecall> precision_recall(std::span<const Vertex> detected,
                                                std::span<const Vertex> truth);
std::optional<double> f_score(std::span<const Vertex> detected, std::span<const Vertex> truth);
std::optional<double> jaccard(std::span<const Vertex> a, std::span<const Vertex> b);

struct CommunityScore {
    Vertex seed = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
    double jaccard = 0.0;
};

struct ScoreReport {
    std::vector<CommunityScore> per_community;
    double aggregate_f = 0.0;        // unweighted mean over detected communities
    double aggregate_jaccard = 0.0;
};

// Scores every detected community against the ground-truth block of its seed
// vertex; aggregates are plain means.
ScoreReport evaluate_assignment(const CommunityAssignment& assignment, const GroundTruth& truth);

}  // namespace cdrw
