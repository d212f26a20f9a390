#include "tdmono/generators/graph.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "tdmono/error.hpp"

namespace tdmono::generators {

using lattice::Integer;
using lattice::IntMatrix;

DualGraph parse_graph(std::string_view text)
{
    DualGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        long u = 0, v = 0;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest))
            throw GraphFormatError("line " + std::to_string(line_no) +
                                   ": expected two vertex indices, got \"" + line + "\"");
        if (u < 1 || v < 1 || u > 1000000 || v > 1000000)
            throw GraphFormatError("line " + std::to_string(line_no) +
                                   ": vertex indices are 1-based");
        if (u == v)
            throw LoopRejected("line " + std::to_string(line_no) + ": loop at vertex " +
                               std::to_string(u));
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        g.vertices = std::max({g.vertices, static_cast<int>(u), static_cast<int>(v)});
    }
    return g;
}

DualGraph cycle_graph(int n)
{
    DualGraph g;
    g.vertices = n;
    for (int c = 1; c <= n; ++c)
        g.edges.emplace_back(c, c % n + 1);
    return g;
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    std::vector<int> parent;
};

} // namespace

bool is_connected(const DualGraph& g)
{
    if (g.vertices <= 1)
        return true;
    UnionFind uf(g.vertices);
    int merges = 0;
    for (auto [u, v] : g.edges)
        merges += uf.unite(u, v);
    return merges == g.vertices - 1;
}

Integer spanning_tree_count_brute_force(const DualGraph& g)
{
    const std::size_t e = g.edges.size();
    if (e > 24)
        throw DimensionMismatch("too many edges for brute-force enumeration");
    Integer count = 0;
    for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
        if (__builtin_popcountl(mask) != g.vertices - 1)
            continue;
        UnionFind uf(g.vertices);
        bool acyclic = true;
        for (std::size_t t = 0; t < e && acyclic; ++t)
            if (mask >> t & 1)
                acyclic = uf.unite(g.edges[t].first, g.edges[t].second);
        if (acyclic)
            count += 1;
    }
    return count;
}

Integer spanning_tree_count_matrix_tree(const DualGraph& g)
{
    if (g.vertices <= 1)
        return 1;
    // Laplacian with the last vertex deleted.
    const auto n = static_cast<std::size_t>(g.vertices) - 1;
    IntMatrix lap(n, n);
    for (auto [u, v] : g.edges) {
        const auto a = static_cast<std::size_t>(u) - 1, b = static_cast<std::size_t>(v) - 1;
        if (a < n)
            lap(a, a) += 1;
        if (b < n)
            lap(b, b) += 1;
        if (a < n && b < n) {
            lap(a, b) -= 1;
            lap(b, a) -= 1;
        }
    }
    return lattice::determinant(lap);
}

Integer spanning_tree_count(const DualGraph& g)
{
    return g.edges.size() <= 12 ? spanning_tree_count_brute_force(g)
                                : spanning_tree_count_matrix_tree(g);
}

} // namespace tdmono::generators
