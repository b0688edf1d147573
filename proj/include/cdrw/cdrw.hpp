#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cdrw/graph.hpp"
#include "cdrw/mixing_search.hpp"
#include "cdrw/random_walk.hpp"

namespace cdrw {

struct CdrwConfig {
    double delta = 0.0;              // stop-rule threshold (conductance of the input)
    std::size_t max_walk_length = 0; // 0: use ceil(max_walk_c * log2 n)
    double max_walk_c = 4.0;
    MixingSearchConfig mixing;
    std::uint64_t seed = 0;

    std::size_t resolved_max_walk_length(std::size_t n) const;
};

struct TraceRecord {
    std::size_t step = 0;
    std::size_t set_size = 0;  // 0 when no candidate size passed
    double score_sum = 0.0;
    bool mixed = false;
    bool stopped = false;  // stop rule (or a mixing-set gap) fired here
};

struct CommunityResult {
    std::vector<Vertex> members;  // sorted, never empty
    Vertex seed_vertex = 0;
    bool isolated_seed = false;   // degree-0 seed: singleton returned
    bool seed_in_set = true;      // flags (rather than patches) a missing seed
    bool no_mixing_found = false; // walk never produced a mixing set
    std::vector<TraceRecord> trace;
};

struct CommunityAssignment {
    std::vector<std::vector<Vertex>> communities;  // disjoint, sorted
    std::vector<Vertex> per_community_seed;
    std::vector<Vertex> residual;  // empty once detection completes
};

struct DetailedAssignment {
    CommunityAssignment assignment;
    std::vector<CommunityResult> runs;  // one per accepted community
};

// Community of the seed vertex: walks step by step, finds the largest mixing
// set per step, and stops when the set size fails to grow by (1+delta).
CommunityResult detect_community(const Graph& g, Vertex s, const CdrwConfig& cfg);

// Full extraction: repeatedly seeds from the unassigned pool, intersects each
// detected set with the pool, and records it; always ends in a partition.
CommunityAssignment detect_all(const Graph& g, const CdrwConfig& cfg);
DetailedAssignment detect_all_detailed(const Graph& g, const CdrwConfig& cfg);

namespace detail {

// The walk-length loop shared by the in-process and the CONGEST-simulated
// runs; the hooks are the only place the two differ, so cost accounting can
// never perturb results.
struct DriverHooks {
    std::function<ProbVector(const ProbVector&)> step;
    std::function<std::optional<MixingSetResult>(const ProbVector&, std::uint64_t jitter_seed)> search;
};

CommunityResult run_driver(const Graph& g, Vertex s, const CdrwConfig& cfg,
                           const DriverHooks& hooks);

using SeedDetector = std::function<CommunityResult(Vertex)>;
DetailedAssignment pool_loop(const Graph& g, const CdrwConfig& cfg, const SeedDetector& detect);

}  // namespace detail

}  // namespace cdrw
