#pragma once

#include <vector>

#include "tdmono/lattice/homology.hpp"
#include "tdmono/strata/model.hpp"
#include "tdmono/toric/fan.hpp"

namespace tdmono::toric {

using lattice::Integer;

/**
 * Chow groups of a smooth complete toric variety. CH^k is generated by the
 * orbit closures V(sigma), dim sigma = k, modulo the character relations,
 * and is presented in a chosen basis:
 *
 *   to_basis[k] : Z^{#cones_k} -> Z^{rank_k}   generator coordinates -> basis
 *   lifts[k]    : Z^{rank_k} -> Z^{#cones_k}   basis -> a representing combination
 *
 * When possible the basis consists of orbit closures themselves (the first
 * cones, in order, that extend to a basis); basis_cones[k] lists them.
 */
struct ToricChow {
    int dimension = 0;
    std::vector<std::vector<Cone>> cones; // by dimension
    std::vector<IntMatrix> relations;      // rows are relations among cones[k]
    std::vector<IntMatrix> to_basis;
    std::vector<IntMatrix> lifts;
    std::vector<std::vector<Cone>> basis_cones; // empty if no orbit-closure basis exists
    std::vector<lattice::FgAbGroup> groups;

    std::size_t rank(int k) const;

    // Basis coordinates of [V(sigma)].
    std::vector<Integer> cone_class(const Cone& sigma) const;
    std::size_t cone_index(int k, const Cone& sigma) const; // throws InvalidFan if absent

    // Degree of a class in CH^dimension (maximal cones have degree 1).
    Integer degree(const std::vector<Integer>& top_class) const;
};

// Throws InvalidFan if validate_fan fails, TorsionInToricChow if some
// quotient has torsion.
ToricChow chow_from_fan(const Fan& f);

// Multiplication by [D_rho] : CH^k -> CH^{k+1}, as a rank_{k+1} x rank_k matrix.
IntMatrix divisor_action(const Fan& f, const ToricChow& tc, int rho, int k);

// Multiplication by [V(sigma)] : CH^k -> CH^{k + dim sigma}.
IntMatrix cone_action(const Fan& f, const ToricChow& tc, const Cone& sigma, int k);

// Intersection x . y for x in CH^a, y in CH^b.
std::vector<Integer> intersect(const Fan& f, const ToricChow& tc, const std::vector<Integer>& x,
                               int a, const std::vector<Integer>& y, int b);

// Whether sum a_rho D_rho is ample (strictly convex support function).
bool is_ample(const Fan& f, const std::vector<long>& coefficients);

// Lefschetz maps for xi = sum a_rho D_rho and the degree pairings, packaged
// as stratum data. Throws NotAmple.
strata::StratumChowData lefschetz_and_pairings(const Fan& f, const ToricChow& tc,
                                               const std::vector<long>& ample);

} // namespace tdmono::toric
