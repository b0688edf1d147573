#include "cdrw/random_walk.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cdrw/rng.hpp"

namespace cdrw {

ProbVector ProbVector::delta(const Graph& g, Vertex s) {
    ProbVector p;
    p.values.assign(g.num_vertices(), 0.0);
    p.values[s] = 1.0;
    p.source = s;
    return p;
}

double ProbVector::total_mass() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

ProbVector walk_step(const Graph& g, const ProbVector& p, double laziness) {
    if (!(laziness >= 0.0 && laziness < 1.0)) throw std::invalid_argument("laziness outside [0,1)");
    ProbVector next;
    next.values.assign(g.num_vertices(), 0.0);
    next.step = p.step + 1;
    next.source = p.source;
    const double moving = 1.0 - laziness;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const double mass = p.values[u];
        if (mass == 0.0) continue;
        const std::size_t d = g.degree(u);
        if (d == 0) throw std::domain_error("walk_step: positive mass on isolated vertex");
        if (laziness != 0.0) next.values[u] += laziness * mass;
        const double share = moving * mass / static_cast<double>(d);
        for (Vertex v : g.neighbors(u)) next.values[v] += share;
    }
    return next;
}

std::vector<double> restrict_to(const ProbVector& p, std::span<const Vertex> s) {
    std::vector<double> out(p.values.size(), 0.0);
    for (Vertex v : s) out[v] = p.values[v];
    return out;
}

double l1_to_stationary(const Graph& g, const ProbVector& p) {
    if (g.num_edges() == 0) throw std::domain_error("stationary distribution undefined: no edges");
    const double vol = static_cast<double>(g.volume());
    double dist = 0.0;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        dist += std::abs(p.values[u] - static_cast<double>(g.degree(u)) / vol);
    return dist;
}

std::optional<std::size_t> mixing_time(const Graph& g, Vertex s, double epsilon,
                                       std::size_t max_steps, double laziness) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    ProbVector p = ProbVector::delta(g, s);
    for (std::size_t t = 0; t <= max_steps; ++t) {
        if (l1_to_stationary(g, p) < epsilon) return t;
        if (t == max_steps) break;
        p = walk_step(g, p, laziness);
    }
    return std::nullopt;
}

double estimate_lambda2(const Graph& g, std::size_t iterations, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    if (n < 2 || g.num_edges() == 0) throw std::invalid_argument("estimate_lambda2: need a connected graph");

    // Work with N = D^{-1/2} A D^{-1/2}, whose spectrum equals the transition
    // matrix's. Top eigenvector is sqrt(d(u)); deflate it and track the norm
    // growth rate, which converges to the largest remaining |eigenvalue|.
    std::vector<double> sqrt_deg(n);
    double norm_phi = 0.0;
    for (Vertex u = 0; u < n; ++u) {
        sqrt_deg[u] = std::sqrt(static_cast<double>(g.degree(u)));
        norm_phi += g.degree(u);
    }
    norm_phi = std::sqrt(norm_phi);
    std::vector<double> phi(n);
    for (Vertex u = 0; u < n; ++u) phi[u] = sqrt_deg[u] / norm_phi;

    auto deflate = [&](std::vector<double>& v) {
        double dot = 0.0;
        for (Vertex u = 0; u < n; ++u) dot += v[u] * phi[u];
        for (Vertex u = 0; u < n; ++u) v[u] -= dot * phi[u];
    };
    auto norm2 = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };

    auto eng = make_engine(mix_seed(seed, kEigenStream));
    std::vector<double> v(n);
    for (Vertex u = 0; u < n; ++u) v[u] = uniform01(eng) - 0.5;
    deflate(v);
    double nv = norm2(v);
    if (nv == 0.0) return 0.0;
    for (Vertex u = 0; u < n; ++u) v[u] /= nv;

    double estimate = 0.0;
    std::vector<double> w(n);
    for (std::size_t it = 0; it < iterations; ++it) {
        std::fill(w.begin(), w.end(), 0.0);
        for (Vertex u = 0; u < n; ++u) {
            if (v[u] == 0.0 || sqrt_deg[u] == 0.0) continue;
            const double contrib = v[u] / sqrt_deg[u];
            for (Vertex x : g.neighbors(u)) w[x] += contrib / sqrt_deg[x];
        }
        deflate(w);
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        estimate = nw;  // ||N v|| with ||v|| = 1
        for (Vertex u = 0; u < n; ++u) v[u] = w[u] / nw;
    }
    return estimate;
}

}  // namespace cdrw
