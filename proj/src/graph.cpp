#include "cdrw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "cdrw/rng.hpp"

namespace cdrw {

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");

    Graph g;
    g.edge_count_ = edges.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adj_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (std::size_t u = 0; u < n; ++u)
        std::sort(g.adj_.begin() + g.offsets_[u], g.adj_.begin() + g.offsets_[u + 1]);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::arc_index(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) throw std::invalid_argument("arc_index: no such edge");
    return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < num_vertices(); ++u) d = std::max(d, degree(static_cast<Vertex>(u)));
    return d;
}

std::vector<std::vector<Vertex>> GroundTruth::blocks() const {
    std::vector<std::vector<Vertex>> out(num_blocks);
    for (Vertex v = 0; v < labels.size(); ++v) out[labels[v]].push_back(v);
    return out;
}

void PpmParams::validate() const {
    if (block_size < 2) throw std::invalid_argument("block_size must be >= 2");
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p outside [0,1]");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q outside [0,1]");
    if (q > p) throw std::invalid_argument("q must not exceed p");
}

namespace {

// Skip-length (geometric) sampling over pair index space [0, total): emits
// each index independently with probability p in O(expected hits) time,
// identically distributed to per-pair Bernoulli trials.
template <typename Emit>
void sample_indices(std::uint64_t total, double p, std::mt19937_64& eng, Emit emit) {
    if (total == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < total; ++i) emit(i);
        return;
    }
    const double log1mp = std::log1p(-p);
    std::uint64_t i = 0;
    while (true) {
        double u = 1.0 - uniform01(eng);  // (0,1]
        double skip = std::floor(std::log(u) / log1mp);
        if (skip >= static_cast<double>(total)) return;  // overflow-safe bail-out
        i += static_cast<std::uint64_t>(skip);
        if (i >= total) return;
        emit(i);
        ++i;
    }
}

// Decodes ascending pair indices of the upper-triangular (u < v) enumeration
// of an n-vertex pair space by walking rows cumulatively.
class PairDecoder {
public:
    explicit PairDecoder(std::uint64_t n) : n_(n) {}

    std::pair<Vertex, Vertex> decode(std::uint64_t idx) {
        while (idx >= row_start_ + (n_ - 1 - row_)) {
            row_start_ += n_ - 1 - row_;
            ++row_;
        }
        return {static_cast<Vertex>(row_), static_cast<Vertex>(row_ + 1 + (idx - row_start_))};
    }

private:
    std::uint64_t n_;
    std::uint64_t row_ = 0;
    std::uint64_t row_start_ = 0;
};

void sample_intra_block(std::uint64_t block_size, double p, std::mt19937_64& eng, Vertex base,
                        std::vector<std::pair<Vertex, Vertex>>& edges) {
    const std::uint64_t total = block_size * (block_size - 1) / 2;
    PairDecoder dec(block_size);
    sample_indices(total, p, eng, [&](std::uint64_t idx) {
        auto [a, b] = dec.decode(idx);
        edges.emplace_back(base + a, base + b);
    });
}

void sample_inter_block(std::uint64_t block_size, double q, std::mt19937_64& eng, Vertex base_i,
                        Vertex base_j, std::vector<std::pair<Vertex, Vertex>>& edges) {
    const std::uint64_t total = block_size * block_size;
    sample_indices(total, q, eng, [&](std::uint64_t idx) {
        edges.emplace_back(base_i + static_cast<Vertex>(idx / block_size),
                           base_j + static_cast<Vertex>(idx % block_size));
    });
}

}  // namespace

Graph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p outside [0,1]");
    std::vector<std::pair<Vertex, Vertex>> edges;
    // Same stream derivation as the (0,0) block of generate_gnpq, so a
    // one-block planted partition instance is bit-identical to G_np.
    auto eng = make_engine(mix_seed(seed, kGeneratorStream, 0, 0));
    sample_intra_block(n, p, eng, 0, edges);
    return Graph::from_edges(n, std::move(edges));
}

std::pair<Graph, GroundTruth> generate_gnpq(const PpmParams& params) {
    params.validate();
    const std::size_t n = params.total_vertices();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint32_t i = 0; i < params.blocks; ++i) {
        for (std::uint32_t j = i; j < params.blocks; ++j) {
            auto eng = make_engine(mix_seed(params.seed, kGeneratorStream, i, j));
            if (i == j) {
                sample_intra_block(params.block_size, params.p, eng,
                                   static_cast<Vertex>(i * params.block_size), edges);
            } else {
                sample_inter_block(params.block_size, params.q, eng,
                                   static_cast<Vertex>(i * params.block_size),
                                   static_cast<Vertex>(j * params.block_size), edges);
            }
        }
    }
    GroundTruth gt;
    gt.num_blocks = params.blocks;
    gt.block_size = params.block_size;
    gt.labels.resize(n);
    for (Vertex v = 0; v < n; ++v) gt.labels[v] = static_cast<std::uint32_t>(v / params.block_size);
    return {Graph::from_edges(n, std::move(edges)), std::move(gt)};
}

double conductance_of_set(const Graph& g, std::span<const Vertex> s) {
    const std::size_t n = g.num_vertices();
    if (s.empty() || s.size() >= n) throw std::invalid_argument("set must be a proper nonempty subset");
    std::vector<char> in_set(n, 0);
    for (Vertex v : s) in_set[v] = 1;
    std::uint64_t cut = 0;
    std::uint64_t vol_s = 0;
    for (Vertex u : s) {
        vol_s += g.degree(u);
        for (Vertex v : g.neighbors(u))
            if (!in_set[v]) ++cut;
    }
    const std::uint64_t vol_rest = g.volume() - vol_s;
    const std::uint64_t denom = std::min(vol_s, vol_rest);
    if (denom == 0) throw std::domain_error("conductance undefined: zero-volume side");
    return static_cast<double>(cut) / static_cast<double>(denom);
}

double ppm_analytic_conductance(double p, double q, std::uint32_t r) {
    if (r == 1) return 0.0;
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    return q * (r - 1) / (p + q * (r - 1));
}

double ppm_analytic_conductance(const PpmParams& params) {
    return ppm_analytic_conductance(params.p, params.q, params.blocks);
}

std::vector<Vertex> bfs_ball(const Graph& g, Vertex s, std::size_t radius) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> ball{s};
    seen[s] = 1;
    std::vector<Vertex> frontier{s};
    for (std::size_t depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    next.push_back(v);
                    ball.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.assign(1, s);
        std::vector<Vertex> comp;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace cdrw
