#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cdrw/cdrw.hpp"
#include "cdrw/graph.hpp"

namespace cdrw {

struct CdstConfig {
    double alpha = 0.3;  // fraction of adjacent edges eligible for reorientation
    std::uint64_t seed = 0;
    bool use_minhash = false;
    std::size_t minhash_hashes = 64;

    void validate() const;
};

// Working graph for the reorientation rounds; adjacency stays symmetric
// through every add/remove.
class MutableGraph {
public:
    explicit MutableGraph(const Graph& g);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return edge_count_; }
    std::size_t degree(Vertex u) const { return adj_[u].size(); }
    std::span<const Vertex> neighbors(Vertex u) const { return adj_[u]; }
    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);     // no-op if present
    void remove_edge(Vertex u, Vertex v);  // no-op if absent

    Graph to_graph() const;

private:
    std::vector<std::vector<Vertex>> adj_;  // each sorted
    std::size_t edge_count_ = 0;
};

// Jaccard similarity of the endpoint neighborhoods of an existing edge.
double edge_strength(const MutableGraph& g, Vertex u, Vertex v);

// Unbiased minhash estimate of the Jaccard similarity of two sorted sets.
double minhash_jaccard(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t hashes,
                       std::uint64_t seed);
double minhash_strength(const MutableGraph& g, Vertex u, Vertex v, std::size_t hashes,
                        std::uint64_t seed);

using CdstRoundObserver = std::function<void(std::size_t round, const MutableGraph& state)>;

// Sparsification-triangulation rounds followed by a connected-components
// readout. Each round every still-active vertex reorients its
// min(d(v)-1, floor(alpha*d(v)/round)) weakest edges; removal never isolates
// an endpoint, and every removal triggers one re-wiring attempt.
CommunityAssignment run_cdst(const Graph& g, const CdstConfig& cfg,
                             const CdstRoundObserver& observer = nullptr);

}  // namespace cdrw
