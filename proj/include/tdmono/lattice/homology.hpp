#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdmono/lattice/int_matrix.hpp"
#include "tdmono/lattice/smith.hpp"

namespace tdmono::lattice {

// Isomorphism type Z^rank + Z/t_1 + ... + Z/t_s with t_1 | t_2 | ... and t_k > 1.
struct FgAbGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const FgAbGroup&) const = default;

    // Drops unit divisors; the input must already be a divisor chain.
    static FgAbGroup from_divisors(std::size_t rank, const std::vector<Integer>& divisors);
};

/**
 * ker(outgoing) / im(incoming) with enough data to push classes around.
 *
 * Coordinates: a cycle z in the ambient lattice has kernel coordinates
 * x = kernel_left_inverse * z. The Smith form of the image inside the kernel,
 * quotient_U * image_in_kernel * V = diag, splits the quotient: rows
 * [0, divisors.size()) of quotient_U * x are torsion-or-trivial coordinates,
 * the remaining rows are free coordinates. Lifts go the other way through
 * quotient_U_inv. Everything is deterministic in the input matrices.
 */
struct SubquotientPresentation {
    std::size_t ambient_rank = 0;
    IntMatrix kernel_basis;        // ambient x r
    IntMatrix kernel_left_inverse; // r x ambient
    IntMatrix image_gens;          // ambient x p (the incoming matrix)
    IntMatrix image_in_kernel;     // r x p
    IntMatrix quotient_U;          // r x r
    IntMatrix quotient_U_inv;      // r x r
    std::vector<Integer> divisors; // elementary divisors of image_in_kernel
    FgAbGroup group;

    std::size_t kernel_rank() const noexcept { return kernel_basis.cols(); }
    std::size_t free_rank() const noexcept { return group.rank; }

    // free_rank x ambient: ambient cycle -> free-quotient coordinates.
    IntMatrix free_projection() const;
    // ambient x free_rank: cycle representatives of the free basis.
    IntMatrix free_lifts() const;
    // ambient x torsion count: representatives of the torsion generators.
    IntMatrix torsion_lifts() const;
    // torsion count x ambient: torsion coordinates (to be read mod group.torsion[k]).
    IntMatrix torsion_projection() const;

    // Whether an ambient vector lies in ker(outgoing) / im(incoming).
    bool contains_cycle(const std::vector<Integer>& z) const;
    bool contains_boundary(const std::vector<Integer>& z) const;

private:
    std::size_t first_torsion_index() const;
};

// ker(outgoing) / im(incoming). incoming is ambient x p, outgoing is q x ambient
// (zero-width shapes allowed). Throws CompositionNotZero if outgoing * incoming != 0.
SubquotientPresentation homology(const IntMatrix& incoming, const IntMatrix& outgoing);

struct InducedMap {
    IntMatrix free;    // dst.free_rank x src.free_rank
    IntMatrix torsion; // dst torsion count x src torsion count, entries reduced mod dst divisors
};

// Map induced on subquotients by an ambient map that sends cycles to cycles
// and boundaries to boundaries (both checked; NotChainCompatible otherwise).
InducedMap induced_map(const SubquotientPresentation& src, const SubquotientPresentation& dst,
                       const IntMatrix& ambient_map);

struct IsogenyVerdict {
    bool is_isogeny = false;
    std::optional<Integer> cokernel_exponent;
    std::optional<Integer> cokernel_order;
    std::vector<Integer> cokernel_invariants; // elementary divisors > 1
};

// f is the matrix of a map between free quotients.
IsogenyVerdict isogeny_verdict(const IntMatrix& f);

} // namespace tdmono::lattice
