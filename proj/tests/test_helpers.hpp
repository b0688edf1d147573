#pragma once

#include <vector>

#include "cdrw/graph.hpp"

namespace testutil {

inline cdrw::Graph complete_graph(std::size_t n) {
    std::vector<std::pair<cdrw::Vertex, cdrw::Vertex>> edges;
    for (cdrw::Vertex u = 0; u < n; ++u)
        for (cdrw::Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return cdrw::Graph::from_edges(n, std::move(edges));
}

inline cdrw::Graph path_graph(std::size_t n) {
    std::vector<std::pair<cdrw::Vertex, cdrw::Vertex>> edges;
    for (cdrw::Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return cdrw::Graph::from_edges(n, std::move(edges));
}

inline cdrw::Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<cdrw::Vertex, cdrw::Vertex>> edges;
    for (cdrw::Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, static_cast<cdrw::Vertex>(n - 1));
    return cdrw::Graph::from_edges(n, std::move(edges));
}

// r disjoint complete graphs of c vertices each.
inline cdrw::Graph disjoint_cliques(std::size_t r, std::size_t c) {
    std::vector<std::pair<cdrw::Vertex, cdrw::Vertex>> edges;
    for (std::size_t b = 0; b < r; ++b) {
        const auto base = static_cast<cdrw::Vertex>(b * c);
        for (cdrw::Vertex u = 0; u < c; ++u)
            for (cdrw::Vertex v = u + 1; v < c; ++v) edges.emplace_back(base + u, base + v);
    }
    return cdrw::Graph::from_edges(r * c, std::move(edges));
}

inline cdrw::Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<cdrw::Vertex, cdrw::Vertex>> edges;
    for (cdrw::Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return cdrw::Graph::from_edges(leaves + 1, std::move(edges));
}

}  // namespace testutil
