#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cdrw/cdrw.hpp"
#include "cdrw/graph.hpp"
#include "cdrw/mixing_search.hpp"
#include "cdrw/random_walk.hpp"

namespace cdrw {

struct PhaseCost {
    std::uint64_t rounds = 0;
    std::uint64_t messages = 0;
};

// Round/message account of one simulated run, split by phase. edge_traffic
// holds the per-directed-arc message counts so the k-machine model can replay
// the same traffic against a vertex partition.
struct CostLedger {
    PhaseCost bfs, flood, select, control;
    std::vector<std::uint64_t> edge_traffic;  // indexed by Graph arc index
    std::size_t graph_n = 0;
    std::size_t graph_m = 0;

    void attach(const Graph& g);
    std::uint64_t rounds() const { return bfs.rounds + flood.rounds + select.rounds + control.rounds; }
    std::uint64_t messages() const {
        return bfs.messages + flood.messages + select.messages + control.messages;
    }
};

struct BfsTree {
    static constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();
    static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

    Vertex root = 0;
    std::vector<Vertex> parent;       // kNoParent at the root and off-tree
    std::vector<std::uint32_t> depth; // kUnreached off-tree
    std::uint32_t height = 0;
    std::vector<Vertex> covered;      // sorted by id

    std::size_t tree_edges() const { return covered.empty() ? 0 : covered.size() - 1; }
};

// Layered flooding BFS from root, truncated at depth_cap. Charges one round
// per layer; every frontier vertex messages all its neighbors, and the final
// layer never transmits (the tree is complete once it joins).
BfsTree build_bfs(const Graph& g, Vertex root, std::size_t depth_cap, CostLedger& ledger);

// walk_step plus accounting: one round, and d(u) messages per vertex u that
// held mass. Output is bit-identical to walk_step.
ProbVector flood_step_cost(const Graph& g, const ProbVector& p, CostLedger& ledger);

struct DistributedSelection {
    std::vector<Vertex> members;  // sorted by id
    double score_sum = 0.0;
    std::size_t iterations = 0;  // broadcast/convergecast cycles, incl. the min/max collection
};

// Root-driven bisection on the (tie-jittered) score values until exactly k
// vertices qualify. Each iteration charges 2*height rounds and 2*tree_edges
// messages. Result equals select_smallest over the covered vertices.
DistributedSelection distributed_select(const Graph& g, const BfsTree& tree,
                                        std::span<const double> scores, std::size_t k,
                                        CostLedger& ledger, std::uint64_t tie_seed,
                                        double tie_break_scale);

// detect_community with full CONGEST accounting; identical community for
// identical config.
CommunityResult run_cdrw_congest(const Graph& g, Vertex s, const CdrwConfig& cfg,
                                 CostLedger& ledger);
std::pair<CommunityResult, CostLedger> run_cdrw_congest(const Graph& g, Vertex s,
                                                        const CdrwConfig& cfg);

// Pool loop over the simulated runner, accumulating one ledger.
std::pair<DetailedAssignment, CostLedger> detect_all_congest(const Graph& g, const CdrwConfig& cfg);

}  // namespace cdrw
