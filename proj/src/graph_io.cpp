#include "cdrw/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cdrw {

void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string header;
    std::getline(in, header);
    std::size_t n = 0, m = 0;
    if (std::sscanf(header.c_str(), "# n=%zu m=%zu", &n, &m) != 2)
        throw std::runtime_error("bad edge-list header in " + path);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    Vertex u, v;
    while (in >> u >> v) {
        if (u >= v) throw std::runtime_error("edge not in u < v order in " + path);
        edges.emplace_back(u, v);
    }
    if (edges.size() != m) throw std::runtime_error("edge count mismatch in " + path);
    return Graph::from_edges(n, std::move(edges));
}

void write_labels(const std::string& path, const GroundTruth& gt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (Vertex v = 0; v < gt.labels.size(); ++v) out << v << " " << gt.labels[v] << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

GroundTruth read_labels(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    GroundTruth gt;
    gt.labels.assign(n, 0);
    std::vector<char> seen(n, 0);
    Vertex v;
    std::uint32_t b;
    std::size_t count = 0;
    while (in >> v >> b) {
        if (v >= n) throw std::runtime_error("label vertex out of range in " + path);
        if (seen[v]) throw std::runtime_error("duplicate label for vertex in " + path);
        seen[v] = 1;
        gt.labels[v] = b;
        gt.num_blocks = std::max(gt.num_blocks, b + 1);
        ++count;
    }
    if (count != n) throw std::runtime_error("labels file does not cover all vertices: " + path);
    std::vector<std::size_t> sizes(gt.num_blocks, 0);
    for (auto lb : gt.labels) ++sizes[lb];
    for (auto s : sizes)
        if (s == 0) throw std::runtime_error("empty block in labels file: " + path);
    const bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes[0]; });
    gt.block_size = uniform ? sizes[0] : 0;
    return gt;
}

}  // namespace cdrw
