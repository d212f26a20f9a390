#pragma once

#include "tdmono/generators/graph.hpp"
#include "tdmono/strata/model.hpp"
#include "tdmono/toric/fan.hpp"

namespace tdmono::generators {

// Cycle of n projective lines; same model as gen_mumford(cycle_graph(n)).
// Throws NTooSmall for n < 3.
strata::DegenerationModel gen_ngon(int n);

// Curve whose components are projective lines indexed by the vertices and
// whose nodes are the edges. Parallel edges share one stratum, one point
// per edge in input order. Throws LoopRejected, Disconnected.
strata::DegenerationModel gen_mumford(const DualGraph& g);

// Hexagonal fan of the blow-up of P^2 in three points (degree 6 del Pezzo).
toric::Fan hexagon_fan();

/**
 * Degenerate abelian surface: the plane triangulated by the lines x, y,
 * x - y in Z, modulo the index-3 lattice x + y = 0 mod 3. Three components
 * (degree 6 del Pezzo surfaces), nine double curves in three pair strata,
 * six triple points.
 */
strata::DegenerationModel gen_abelian_surface();

} // namespace tdmono::generators
