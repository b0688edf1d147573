#include "cdrw/metrics.hpp"

#include <algorithm>

namespace cdrw {

namespace {

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

std::optional<PrecisionRecall> precision_recall(std::span<const Vertex> detected,
                                                std::span<const Vertex> truth) {
    if (detected.empty() || truth.empty()) return std::nullopt;
    const double inter = static_cast<double>(intersection_size(detected, truth));
    return PrecisionRecall{inter / static_cast<double>(detected.size()),
                           inter / static_cast<double>(truth.size())};
}

std::optional<double> f_score(std::span<const Vertex> detected, std::span<const Vertex> truth) {
    const auto pr = precision_recall(detected, truth);
    if (!pr) return std::nullopt;
    const double denom = pr->precision + pr->recall;
    if (denom == 0.0) return 0.0;
    return 2.0 * pr->precision * pr->recall / denom;
}

std::optional<double> jaccard(std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty() && b.empty()) return std::nullopt;
    const double inter = static_cast<double>(intersection_size(a, b));
    const double uni = static_cast<double>(a.size() + b.size()) - inter;
    return inter / uni;
}

ScoreReport evaluate_assignment(const CommunityAssignment& assignment, const GroundTruth& truth) {
    const auto blocks = truth.blocks();
    ScoreReport report;
    for (std::size_t i = 0; i < assignment.communities.size(); ++i) {
        const auto& community = assignment.communities[i];
        const Vertex seed = assignment.per_community_seed[i];
        const auto& ref = blocks[truth.block_of(seed)];
        CommunityScore score;
        score.seed = seed;
        const auto pr = precision_recall(community, ref);
        score.precision = pr->precision;
        score.recall = pr->recall;
        score.f_score = *f_score(community, ref);
        score.jaccard = *jaccard(community, ref);
        report.per_community.push_back(score);
    }
    if (!report.per_community.empty()) {
        for (const auto& s : report.per_community) {
            report.aggregate_f += s.f_score;
            report.aggregate_jaccard += s.jaccard;
        }
        report.aggregate_f /= static_cast<double>(report.per_community.size());
        report.aggregate_jaccard /= static_cast<double>(report.per_community.size());
    }
    return report;
}

}  // namespace cdrw
