#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tdmono/lattice/int_matrix.hpp"

namespace tdmono::generators {

// Multigraph on vertices 1..vertices; parallel edges allowed.
struct DualGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

// One edge per line as "u v" (1-based); blank lines are skipped. The vertex
// count is the largest index seen. Throws GraphFormatError, LoopRejected.
DualGraph parse_graph(std::string_view text);

DualGraph cycle_graph(int n);

bool is_connected(const DualGraph& g);

// Spanning-tree count: brute force over edge subsets up to 12 edges,
// matrix-tree theorem beyond. Both are exposed for cross-checking.
lattice::Integer spanning_tree_count(const DualGraph& g);
lattice::Integer spanning_tree_count_brute_force(const DualGraph& g);
lattice::Integer spanning_tree_count_matrix_tree(const DualGraph& g);

} // namespace tdmono::generators
