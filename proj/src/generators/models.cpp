#include "tdmono/generators/models.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tdmono/error.hpp"
#include "tdmono/toric/chow.hpp"

namespace tdmono::generators {

using lattice::Integer;
using lattice::IntMatrix;
using strata::DegenerationModel;
using strata::IncidenceKey;
using strata::StratumChowData;
using strata::Subset;

namespace {

IntMatrix ones(std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = 1;
    return m;
}

StratumChowData projective_line()
{
    return {1, {1, 1}, {IntMatrix{{1}}}, {IntMatrix{{1}}, IntMatrix{{1}}}};
}

// k disjoint points.
StratumChowData points(std::size_t k)
{
    return {0, {k}, {}, {IntMatrix::identity(k)}};
}

// k disjoint projective lines, each of degree 1 for the polarization.
StratumChowData lines(std::size_t k)
{
    const IntMatrix id = IntMatrix::identity(k);
    return {1, {k, k}, {id}, {id, id}};
}

} // namespace

DegenerationModel gen_mumford(const DualGraph& g)
{
    if (g.vertices < 1)
        throw GraphFormatError("graph has no vertices");
    std::map<Subset, std::size_t> multiplicity;
    for (auto [u, v] : g.edges) {
        if (u < 1 || v < 1 || u > g.vertices || v > g.vertices)
            throw GraphFormatError("edge " + std::to_string(u) + " " + std::to_string(v) +
                                   " outside 1.." + std::to_string(g.vertices));
        if (u == v)
            throw LoopRejected("loop at vertex " + std::to_string(u));
        ++multiplicity[{std::min(u, v), std::max(u, v)}];
    }
    if (!is_connected(g))
        throw Disconnected("dual graph is not connected");

    DegenerationModel m;
    m.name = "curve";
    for (const auto& [e, k] : multiplicity)
        for (std::size_t t = 0; t < k; ++t)
            m.name += " " + std::to_string(e[0]) + "-" + std::to_string(e[1]);
    m.dimension = 1;
    m.num_components = g.vertices;
    for (int c = 1; c <= g.vertices; ++c)
        m.strata.emplace(Subset{c}, projective_line());
    for (const auto& [e, k] : multiplicity) {
        m.strata.emplace(e, points(k));
        for (int v : e) {
            m.restrictions.emplace(IncidenceKey{{v}, e, 0}, ones(k, 1));
            m.gysins.emplace(IncidenceKey{e, {v}, 0}, ones(1, k));
        }
    }
    return m;
}

DegenerationModel gen_ngon(int n)
{
    if (n < 3)
        throw NTooSmall("n-gon needs n >= 3, got " + std::to_string(n));
    return gen_mumford(cycle_graph(n));
}

toric::Fan hexagon_fan()
{
    return {2,
            {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}};
}

namespace {

// Edge directions of the triangulation and the class shift each one causes
// (vertex classes are x + y mod 3).
constexpr std::array<std::array<int, 2>, 3> kDirections{{{1, 0}, {0, 1}, {1, 1}}};
constexpr std::array<int, 3> kShift{1, 1, 2};

int mod3(int x)
{
    return ((x % 3) + 3) % 3;
}

int ray_index(int dx, int dy)
{
    const toric::Fan f = hexagon_fan();
    for (std::size_t r = 0; r < f.rays.size(); ++r)
        if (f.rays[r][0] == dx && f.rays[r][1] == dy)
            return static_cast<int>(r);
    throw StructureError("direction is not a ray of the hexagon fan");
}

struct Edge {
    int base;      // class of the start vertex
    int direction; // index into kDirections
    int end() const { return mod3(base + kShift[static_cast<std::size_t>(direction)]); }
    Subset stratum() const { return {std::min(base, end()) + 1, std::max(base, end()) + 1}; }

    // Boundary divisor of component `c` along this edge.
    int ray_in(int c) const
    {
        const auto& d = kDirections[static_cast<std::size_t>(direction)];
        return c == base ? ray_index(d[0], d[1]) : ray_index(-d[0], -d[1]);
    }
};

} // namespace

DegenerationModel gen_abelian_surface()
{
    const toric::Fan fan = hexagon_fan();
    const toric::ToricChow tc = toric::chow_from_fan(fan);
    const StratumChowData surface = toric::lefschetz_and_pairings(fan, tc, {1, 1, 1, 1, 1, 1});

    std::vector<Edge> edges;
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
            edges.push_back({c, d});
    // Triangles {v, v+(1,0), v+(1,1)} and {v, v+(0,1), v+(1,1)}, as edge triples.
    std::vector<std::array<Edge, 3>> triangles;
    for (int c = 0; c < 3; ++c) {
        triangles.push_back({Edge{c, 0}, Edge{mod3(c + 1), 1}, Edge{c, 2}});
        triangles.push_back({Edge{c, 1}, Edge{mod3(c + 1), 0}, Edge{c, 2}});
    }

    // Points of each pair stratum, in a fixed order.
    std::map<Subset, std::vector<Edge>> curves;
    for (const auto& e : edges)
        curves[e.stratum()].push_back(e);
    auto curve_position = [&](const Edge& e) {
        const auto& list = curves.at(e.stratum());
        for (std::size_t t = 0; t < list.size(); ++t)
            if (list[t].base == e.base && list[t].direction == e.direction)
                return t;
        throw StructureError("unknown edge");
    };

    DegenerationModel m;
    m.name = "abelian-surface";
    m.dimension = 2;
    m.num_components = 3;
    for (int c = 1; c <= 3; ++c)
        m.strata.emplace(Subset{c}, surface);
    for (const auto& [s, list] : curves)
        m.strata.emplace(s, lines(list.size()));
    const Subset triple{1, 2, 3};
    m.strata.emplace(triple, points(triangles.size()));

    for (const auto& [s, list] : curves) {
        const std::size_t k = list.size();
        for (int label : s) {
            const int c = label - 1;
            IntMatrix restrict1(k, tc.rank(1));
            IntMatrix gysin0(tc.rank(1), k);
            for (std::size_t t = 0; t < k; ++t) {
                const std::vector<Integer> d = tc.cone_class({list[t].ray_in(c)});
                for (std::size_t b = 0; b < tc.rank(1); ++b) {
                    std::vector<Integer> x(tc.rank(1));
                    x[b] = 1;
                    restrict1(t, b) = tc.degree(toric::intersect(fan, tc, x, 1, d, 1));
                    gysin0(b, t) = d[b];
                }
            }
            m.restrictions.emplace(IncidenceKey{{label}, s, 0}, ones(k, 1));
            m.restrictions.emplace(IncidenceKey{{label}, s, 1}, restrict1);
            m.gysins.emplace(IncidenceKey{s, {label}, 0}, gysin0);
            m.gysins.emplace(IncidenceKey{s, {label}, 1}, ones(1, k));
        }
        IntMatrix to_points(triangles.size(), k);
        for (std::size_t p = 0; p < triangles.size(); ++p)
            for (const auto& e : triangles[p])
                if (e.stratum() == s)
                    to_points(p, curve_position(e)) = 1;
        m.restrictions.emplace(IncidenceKey{s, triple, 0}, to_points);
        m.gysins.emplace(IncidenceKey{triple, s, 0}, to_points.transpose());
    }
    return m;
}

} // namespace tdmono::generators
