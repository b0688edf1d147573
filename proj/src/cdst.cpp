#include "cdrw/cdst.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdrw/rng.hpp"

namespace cdrw {

void CdstConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha outside (0,1]");
    if (minhash_hashes < 1) throw std::invalid_argument("minhash_hashes must be >= 1");
}

MutableGraph::MutableGraph(const Graph& g) : adj_(g.num_vertices()), edge_count_(g.num_edges()) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto nb = g.neighbors(u);
        adj_[u].assign(nb.begin(), nb.end());
    }
}

bool MutableGraph::has_edge(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void MutableGraph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void MutableGraph::remove_edge(Vertex u, Vertex v) {
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v) return;
    adj_[u].erase(it);
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edge_count_;
}

Graph MutableGraph::to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph::from_edges(adj_.size(), std::move(edges));
}

namespace {

std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            ++count, ++i, ++j;
    }
    return count;
}

}  // namespace

double edge_strength(const MutableGraph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge_strength: no such edge");
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    const std::size_t inter = sorted_intersection_size(nu, nv);
    const std::size_t uni = nu.size() + nv.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double minhash_jaccard(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t hashes,
                       std::uint64_t seed) {
    if (hashes < 1) throw std::invalid_argument("minhash_jaccard: need at least one hash");
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < hashes; ++i) {
        const std::uint64_t hseed = mix_seed(seed, kCdstHashStream, i);
        auto hash_of = [&](Vertex x) { return splitmix64(hseed ^ splitmix64(x)); };
        auto argmin = [&](std::span<const Vertex> s) {
            Vertex best = s[0];
            std::uint64_t best_h = hash_of(s[0]);
            for (std::size_t j = 1; j < s.size(); ++j) {
                const std::uint64_t h = hash_of(s[j]);
                if (h < best_h || (h == best_h && s[j] < best)) {
                    best_h = h;
                    best = s[j];
                }
            }
            return best;
        };
        if (argmin(a) == argmin(b)) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(hashes);
}

double minhash_strength(const MutableGraph& g, Vertex u, Vertex v, std::size_t hashes,
                        std::uint64_t seed) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("minhash_strength: no such edge");
    return minhash_jaccard(g.neighbors(u), g.neighbors(v), hashes, seed);
}

CommunityAssignment run_cdst(const Graph& g, const CdstConfig& cfg,
                             const CdstRoundObserver& observer) {
    cfg.validate();
    MutableGraph state(g);
    const std::size_t n = state.num_vertices();
    std::vector<char> halted(n, 0);

    auto strength_of = [&](Vertex u, Vertex v) {
        return cfg.use_minhash ? minhash_strength(state, u, v, cfg.minhash_hashes, cfg.seed)
                               : edge_strength(state, u, v);
    };

    for (std::size_t round = 1;; ++round) {
        // Every active vertex ranks its adjacent edges on the same
        // round-start snapshot and schedules its `count` weakest.
        std::vector<std::vector<Vertex>> scheduled(n);
        bool any_active = false;
        for (Vertex v = 0; v < n; ++v) {
            if (halted[v]) continue;
            const double d = static_cast<double>(state.degree(v));
            const std::size_t count = static_cast<std::size_t>(std::min(
                std::max(0.0, d - 1.0), std::floor(cfg.alpha * d / static_cast<double>(round))));
            if (count == 0) {
                halted[v] = 1;
                continue;
            }
            any_active = true;
            std::vector<std::pair<double, Vertex>> ranked;
            ranked.reserve(state.degree(v));
            for (Vertex u : state.neighbors(v)) ranked.emplace_back(strength_of(v, u), u);
            std::sort(ranked.begin(), ranked.end());
            auto& sched = scheduled[v];
            sched.reserve(count);
            for (std::size_t i = 0; i < count; ++i) sched.push_back(ranked[i].second);
        }
        if (!any_active) break;

        // Sparsification: apply the scheduled removals once, globally. The
        // live degree guard covers both endpoints, since removals scheduled
        // by other vertices may already have landed on v.
        std::vector<std::vector<Vertex>> removed(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex u : scheduled[v]) {
                if (!state.has_edge(v, u)) continue;
                if (state.degree(u) <= 1 || state.degree(v) <= 1) continue;
                state.remove_edge(v, u);
                removed[v].push_back(u);
            }
        }

        // Triangulation: one re-wiring attempt per removed edge.
        for (Vertex v = 0; v < n; ++v) {
            if (removed[v].empty()) continue;
            auto eng = make_engine(mix_seed(cfg.seed, kCdstStream, round, v));
            for (std::size_t i = 0; i < removed[v].size(); ++i) {
                bool added = false;
                if (state.degree(v) >= 2) {
                    const auto nb = state.neighbors(v);
                    const std::size_t ia = bounded_rand(eng, nb.size());
                    std::size_t ib = bounded_rand(eng, nb.size() - 1);
                    if (ib >= ia) ++ib;
                    const Vertex x = nb[ia], y = nb[ib];
                    if (!state.has_edge(x, y)) {
                        state.add_edge(x, y);
                        added = true;
                    }
                }
                if (!added && state.degree(v) >= 1) {
                    const auto nb = state.neighbors(v);
                    const Vertex u2 = nb[bounded_rand(eng, nb.size())];
                    if (state.degree(u2) >= 1) {
                        const auto nb2 = state.neighbors(u2);
                        const Vertex y = nb2[bounded_rand(eng, nb2.size())];
                        if (y != v) state.add_edge(v, y);
                    }
                }
            }
        }

        if (observer) observer(round, state);
    }

    CommunityAssignment out;
    for (auto& comp : connected_components(state.to_graph())) {
        out.per_community_seed.push_back(comp.front());
        out.communities.push_back(std::move(comp));
    }
    return out;
}

}  // namespace cdrw
