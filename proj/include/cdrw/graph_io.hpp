#pragma once

#include <string>

#include "cdrw/graph.hpp"

namespace cdrw {

// Edge-list text format: header "# n=<n> m=<m>", then one "u v" pair per
// line with u < v, ASCII decimal. Labels file: one "vertex block" per line.

void write_edge_list(const std::string& path, const Graph& g);
Graph read_edge_list(const std::string& path);

void write_labels(const std::string& path, const GroundTruth& gt);
GroundTruth read_labels(const std::string& path, std::size_t n);

}  // namespace cdrw
