#include "cdrw/cdrw.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "cdrw/rng.hpp"

namespace cdrw {

std::size_t CdrwConfig::resolved_max_walk_length(std::size_t n) const {
    if (max_walk_length != 0) return max_walk_length;
    const double bound = max_walk_c * std::log2(std::max<std::size_t>(2, n));
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bound)));
}

namespace detail {

CommunityResult run_driver(const Graph& g, Vertex s, const CdrwConfig& cfg,
                           const DriverHooks& hooks) {
    CommunityResult res;
    res.seed_vertex = s;
    if (g.degree(s) == 0) {
        res.members = {s};
        res.isolated_seed = true;
        return res;
    }

    const std::size_t max_len = cfg.resolved_max_walk_length(g.num_vertices());
    ProbVector p = ProbVector::delta(g, s);
    std::optional<MixingSetResult> prev;

    for (std::size_t l = 1; l <= max_len; ++l) {
        p = hooks.step(p);
        auto cur = hooks.search(p, mix_seed(cfg.seed, kTieBreakStream, s, l));
        TraceRecord tr;
        tr.step = l;
        bool stop = false;
        if (!cur) {
            // Gap length: no candidate size mixes here (common while the walk
            // support is still lumpy). Keep the last result and walk on; the
            // stop rule compares successive successful lengths only.
        } else {
            tr.mixed = true;
            tr.set_size = cur->size;
            tr.score_sum = cur->score_sum;
            if (prev && static_cast<double>(cur->size) <
                            (1.0 + cfg.delta) * static_cast<double>(prev->size)) {
                stop = true;
            } else {
                prev = std::move(cur);
            }
        }
        tr.stopped = stop;
        res.trace.push_back(tr);
        if (stop) break;
    }

    if (prev) {
        res.members = prev->members;
    } else {
        res.members = {s};
        res.no_mixing_found = true;
    }
    res.seed_in_set = std::binary_search(res.members.begin(), res.members.end(), s);
    return res;
}

DetailedAssignment pool_loop(const Graph& g, const CdrwConfig& cfg, const SeedDetector& detect) {
    const std::size_t n = g.num_vertices();
    DetailedAssignment out;
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    std::vector<char> in_pool(n, 1);
    constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(n, kUnassigned);
    auto eng = make_engine(mix_seed(cfg.seed, kPoolStream));

    while (!pool.empty()) {
        const std::size_t pick = static_cast<std::size_t>(bounded_rand(eng, pool.size()));
        const Vertex s = pool[pick];
        CommunityResult res = detect(s);

        std::vector<Vertex> claimed;
        claimed.reserve(res.members.size());
        for (Vertex v : res.members)
            if (in_pool[v]) claimed.push_back(v);
        // A walk that mixed entirely into already-claimed territory still has
        // to make progress: fall back to the seed alone.
        if (claimed.empty()) claimed = {s};

        // When most of the detected set already belongs to one recorded
        // community, this claim is a remnant of that same structure (a
        // re-detection from a straggler seed), not a new community: fold the
        // claim in rather than fragmenting the partition.
        std::vector<std::size_t> overlap(out.assignment.communities.size(), 0);
        for (Vertex v : res.members)
            if (owner[v] != kUnassigned) ++overlap[owner[v]];
        std::size_t target = kUnassigned;
        std::size_t best = claimed.size();
        for (std::size_t j = 0; j < overlap.size(); ++j) {
            if (overlap[j] > best) {
                best = overlap[j];
                target = j;
            }
        }

        if (target == kUnassigned) {
            target = out.assignment.communities.size();
            out.assignment.communities.emplace_back();
            out.assignment.per_community_seed.push_back(s);
        }
        auto& community = out.assignment.communities[target];
        community.insert(community.end(), claimed.begin(), claimed.end());
        std::sort(community.begin(), community.end());
        for (Vertex v : claimed) {
            in_pool[v] = 0;
            owner[v] = target;
        }
        pool.erase(std::remove_if(pool.begin(), pool.end(), [&](Vertex v) { return !in_pool[v]; }),
                   pool.end());
        out.runs.push_back(std::move(res));
    }
    return out;
}

}  // namespace detail

CommunityResult detect_community(const Graph& g, Vertex s, const CdrwConfig& cfg) {
    detail::DriverHooks hooks;
    hooks.step = [&g](const ProbVector& p) { return walk_step(g, p); };
    hooks.search = [&g, &cfg](const ProbVector& p, std::uint64_t jitter_seed) {
        return largest_mixing_set(g, p, cfg.mixing, jitter_seed);
    };
    return detail::run_driver(g, s, cfg, hooks);
}

DetailedAssignment detect_all_detailed(const Graph& g, const CdrwConfig& cfg) {
    return detail::pool_loop(g, cfg, [&](Vertex s) { return detect_community(g, s, cfg); });
}

CommunityAssignment detect_all(const Graph& g, const CdrwConfig& cfg) {
    return detect_all_detailed(g, cfg).assignment;
}

}  // namespace cdrw
