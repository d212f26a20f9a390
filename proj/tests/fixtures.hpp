#pragma once

// Hand-built models shared by several test binaries. These are written out
// directly rather than produced by the generators so they can serve as
// independent references for them.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <map>
#include <utility>
#include <vector>

#include "tdmono/strata/model.hpp"

namespace fixtures {

inline std::string read_data(const std::string& relative)
{
    std::ifstream in(std::string(TDMONO_DATA_DIR) + "/" + relative);
    if (!in)
        throw std::runtime_error("cannot open data file " + relative);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

using tdmono::lattice::IntMatrix;
using tdmono::strata::DegenerationModel;
using tdmono::strata::IncidenceKey;
using tdmono::strata::StratumChowData;
using tdmono::strata::Subset;

inline StratumChowData p1()
{
    return {1, {1, 1}, {IntMatrix{{1}}}, {IntMatrix{{1}}, IntMatrix{{1}}}};
}

inline StratumChowData point()
{
    return {0, {1}, {}, {IntMatrix{{1}}}};
}

// P^1 x P^1 with basis (h1, h2) of CH^1 and xi = h1 + h2.
inline StratumChowData p1xp1()
{
    return {2,
            {1, 2, 1},
            {IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}},
            {IntMatrix{{1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1}}}};
}

inline DegenerationModel single(const std::string& name, StratumChowData s)
{
    DegenerationModel m;
    m.name = name;
    m.dimension = s.dim;
    m.num_components = 1;
    m.strata.emplace(Subset{1}, std::move(s));
    return m;
}

// Cycle of n projective lines meeting transversally in single points.
inline DegenerationModel ngon(int n)
{
    DegenerationModel m;
    m.name = "ngon-" + std::to_string(n);
    m.dimension = 1;
    m.num_components = n;
    for (int c = 1; c <= n; ++c)
        m.strata.emplace(Subset{c}, p1());
    for (int c = 1; c <= n; ++c) {
        int a = c, b = c % n + 1;
        if (a > b)
            std::swap(a, b);
        Subset e{a, b};
        m.strata.emplace(e, point());
        for (int v : e) {
            m.restrictions.emplace(IncidenceKey{{v}, e, 0}, IntMatrix{{1}});
            m.gysins.emplace(IncidenceKey{e, {v}, 0}, IntMatrix{{1}});
        }
    }
    return m;
}

// Chain of projective lines with dual graph given by `edges` (1-based,
// parallel edges allowed, no loops). Edge e between u < v is the e-th
// point of the stratum {u,v}, counted in input order.
inline DegenerationModel multigraph(int n, const std::vector<std::pair<int, int>>& edges)
{
    DegenerationModel m;
    m.name = "graph";
    m.dimension = 1;
    m.num_components = n;
    for (int c = 1; c <= n; ++c)
        m.strata.emplace(Subset{c}, p1());
    std::map<Subset, std::size_t> count;
    for (auto [u, v] : edges)
        ++count[{std::min(u, v), std::max(u, v)}];
    for (const auto& [e, k] : count) {
        IntMatrix pairing(k, k);
        for (std::size_t t = 0; t < k; ++t)
            pairing(t, t) = 1;
        m.strata.emplace(e, StratumChowData{0, {k}, {}, {pairing}});
        IntMatrix ones_col(k, 1), ones_row(1, k);
        for (std::size_t t = 0; t < k; ++t) {
            ones_col(t, 0) = 1;
            ones_row(0, t) = 1;
        }
        for (int v : e) {
            m.restrictions.emplace(IncidenceKey{{v}, e, 0}, ones_col);
            m.gysins.emplace(IncidenceKey{e, {v}, 0}, ones_row);
        }
    }
    return m;
}

} // namespace fixtures
