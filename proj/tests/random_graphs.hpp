#pragma once

#include <random>

#include "tdmono/generators/graph.hpp"

namespace fixtures {

// Connected loop-free multigraph with 2..max_vertices vertices and at most
// max_edges edges, resampled until connected.
inline tdmono::generators::DualGraph random_connected(std::mt19937& rng, int max_vertices,
                                                      int max_edges)
{
    for (;;) {
        tdmono::generators::DualGraph g;
        g.vertices = std::uniform_int_distribution<int>(2, max_vertices)(rng);
        const int e = std::uniform_int_distribution<int>(g.vertices - 1, max_edges)(rng);
        std::uniform_int_distribution<int> vertex(1, g.vertices);
        while (static_cast<int>(g.edges.size()) < e) {
            int a = vertex(rng), b = vertex(rng);
            if (a != b)
                g.edges.emplace_back(a, b);
        }
        if (tdmono::generators::is_connected(g))
            return g;
    }
}

} // namespace fixtures
