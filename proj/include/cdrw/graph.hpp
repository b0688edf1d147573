#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cdrw {

using Vertex = std::uint32_t;

// Immutable undirected simple graph in CSR form. Vertex ids are dense 0..n-1.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Rejects self-loops, duplicate edges and
    // out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return edge_count_; }
    std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
    std::size_t volume() const { return 2 * edge_count_; }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    bool has_edge(Vertex u, Vertex v) const;

    // Position of the directed arc u->v in the flat adjacency array.
    // Arc indices are what the CONGEST simulator uses for traffic tallies.
    std::size_t arc_index(Vertex u, Vertex v) const;
    std::size_t arc_begin(Vertex u) const { return offsets_[u]; }
    std::size_t arc_end(Vertex u) const { return offsets_[u + 1]; }
    Vertex arc_head(std::size_t arc) const { return adj_[arc]; }

    std::size_t max_degree() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
    std::size_t edge_count_ = 0;
};

// Block labels of a planted partition instance (or any vertex partition
// loaded from a labels file).
struct GroundTruth {
    std::vector<std::uint32_t> labels;  // per-vertex block id in 0..r-1
    std::uint32_t num_blocks = 0;
    std::size_t block_size = 0;  // n/r for symmetric instances, 0 otherwise

    std::uint32_t block_of(Vertex v) const { return labels[v]; }
    std::vector<std::vector<Vertex>> blocks() const;
};

struct PpmParams {
    std::size_t block_size = 0;  // vertices per block (n_c)
    std::uint32_t blocks = 1;    // block count (r)
    double p = 0.0;              // intra-block edge probability
    double q = 0.0;              // inter-block edge probability
    std::uint64_t seed = 0;

    std::size_t total_vertices() const { return block_size * blocks; }
    void validate() const;  // throws std::invalid_argument
};

// Erdos-Renyi sample: every unordered pair is an edge independently with
// probability p. Deterministic per seed; equals generate_gnpq with one block.
Graph generate_gnp(std::size_t n, double p, std::uint64_t seed);

// Planted partition sample: intra-block pairs with probability p, inter-block
// pairs with q. One RNG sub-stream per block pair, so the edge set is
// bit-reproducible per seed.
std::pair<Graph, GroundTruth> generate_gnpq(const PpmParams& params);

// |E(S, V\S)| / min(vol(S), vol(V\S)). Rejects the empty and full set.
double conductance_of_set(const Graph& g, std::span<const Vertex> s);

// Expected escape probability q(r-1)/(p + q(r-1)) of a walk step out of a
// block; the usual stop-rule threshold for planted partition inputs.
double ppm_analytic_conductance(double p, double q, std::uint32_t r);
double ppm_analytic_conductance(const PpmParams& params);

// Vertices within hop distance <= radius of s, sorted by id.
std::vector<Vertex> bfs_ball(const Graph& g, Vertex s, std::size_t radius);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Smallest k with 2^k >= n (0 for n <= 1).
std::size_t ceil_log2(std::size_t n);

}  // namespace cdrw
