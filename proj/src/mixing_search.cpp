#include "cdrw/mixing_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdrw/rng.hpp"

namespace cdrw {

std::size_t MixingSearchConfig::resolved_initial_size(std::size_t n) const {
    std::size_t r = initial_size != 0 ? initial_size : std::max<std::size_t>(1, ceil_log2(n));
    return std::min(r, n);
}

std::vector<double> deviation_scores(const Graph& g, const ProbVector& p,
                                     std::size_t candidate_size) {
    if (candidate_size < 1) throw std::invalid_argument("candidate_size must be >= 1");
    if (g.num_edges() == 0) throw std::domain_error("deviation_scores: average volume undefined (m=0)");
    const std::size_t n = g.num_vertices();
    const double denom = 2.0 * static_cast<double>(g.num_edges()) * static_cast<double>(candidate_size);
    std::vector<double> scores(n);
    for (Vertex u = 0; u < n; ++u) {
        const double target = static_cast<double>(g.degree(u)) * static_cast<double>(n) / denom;
        scores[u] = std::abs(p.values[u] - target);
    }
    return scores;
}

std::vector<double> tie_jittered_scores(std::span<const double> scores,
                                        std::span<const Vertex> candidates, std::uint64_t tie_seed,
                                        double scale) {
    if (candidates.size() < 2 || scale <= 0.0) return {};
    std::vector<double> sorted;
    sorted.reserve(candidates.size());
    for (Vertex v : candidates) sorted.push_back(scores[v]);
    std::sort(sorted.begin(), sorted.end());
    bool has_dup = false;
    double min_gap = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double gap = sorted[i] - sorted[i - 1];
        if (gap == 0.0)
            has_dup = true;
        else if (min_gap == 0.0 || gap < min_gap)
            min_gap = gap;
    }
    if (!has_dup) return {};
    if (min_gap == 0.0) min_gap = std::max(1.0, std::abs(sorted.back()));
    const double magnitude = scale * min_gap;
    auto eng = make_engine(mix_seed(tie_seed, kTieBreakStream));
    std::vector<double> jittered;
    jittered.reserve(candidates.size());
    for (Vertex v : candidates) jittered.push_back(scores[v] + uniform01(eng) * magnitude);
    return jittered;
}

namespace {

Selection select_impl(std::span<const double> scores, std::span<const Vertex> candidates,
                      std::span<const double> working, std::size_t k) {
    std::vector<std::pair<double, Vertex>> order;
    order.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        order.emplace_back(working.empty() ? scores[candidates[i]] : working[i], candidates[i]);
    if (k < order.size())
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k) - 1, order.end());
    Selection sel;
    sel.members.reserve(k);
    for (std::size_t i = 0; i < k; ++i) sel.members.push_back(order[i].second);
    std::sort(sel.members.begin(), sel.members.end());
    for (Vertex v : sel.members) sel.score_sum += scores[v];
    return sel;
}

}  // namespace

Selection select_smallest_among(std::span<const double> scores, std::span<const Vertex> candidates,
                                std::size_t k, std::uint64_t tie_seed, double tie_break_scale) {
    if (k > candidates.size()) throw std::invalid_argument("select_smallest: k exceeds candidate count");
    if (k == 0) return {};
    const auto working = tie_jittered_scores(scores, candidates, tie_seed, tie_break_scale);
    return select_impl(scores, candidates, working, k);
}

Selection select_smallest(std::span<const double> scores, std::size_t k, std::uint64_t tie_seed,
                          double tie_break_scale) {
    std::vector<Vertex> all(scores.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
    return select_smallest_among(scores, all, k, tie_seed, tie_break_scale);
}

std::vector<std::size_t> candidate_sizes(std::size_t initial, std::size_t n_cap, double growth) {
    if (n_cap == 0) return {};
    if (!(growth > 1.0)) throw std::invalid_argument("growth factor must exceed 1");
    initial = std::max<std::size_t>(1, std::min(initial, n_cap));
    std::vector<std::size_t> sizes;
    double real = static_cast<double>(initial);
    std::size_t prev = 0;
    while (true) {
        std::size_t k = static_cast<std::size_t>(std::ceil(real));
        if (k <= prev) k = prev + 1;
        if (k >= n_cap) {
            sizes.push_back(n_cap);
            break;
        }
        sizes.push_back(k);
        prev = k;
        real *= growth;
    }
    return sizes;
}

std::optional<MixingSetResult> largest_mixing_set(const Graph& g, const ProbVector& p,
                                                  const MixingSearchConfig& cfg,
                                                  std::uint64_t jitter_seed) {
    const std::size_t n = g.num_vertices();
    const std::size_t initial = cfg.resolved_initial_size(n);
    std::optional<MixingSetResult> best;
    for (std::size_t k : candidate_sizes(initial, n, cfg.growth_factor)) {
        const auto scores = deviation_scores(g, p, k);
        auto sel = select_smallest(scores, k, mix_seed(jitter_seed, k), cfg.tie_break_scale);
        if (sel.score_sum < cfg.epsilon_threshold)
            best = MixingSetResult{std::move(sel.members), k, p.step, sel.score_sum};
    }
    return best;
}

}  // namespace cdrw
