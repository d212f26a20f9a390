#pragma once

#include <vector>

#include "tdmono/lattice/int_matrix.hpp"

namespace tdmono::lattice {

/**
 * Smith normal form U * A * V = diag(d_1, ..., d_r, 0, ...) with U, V
 * unimodular and d_1 | d_2 | ... | d_r, all d_k > 0.
 *
 * The inverses of U and V are tracked alongside, since the homology code
 * needs lifts (U^{-1}) as well as projections (U).
 *
 * Naive pivoting on the smallest nonzero entry; cost is roughly cubic in the
 * matrix size times the growth of intermediate entries. Adequate for a few
 * hundred rows. A modular or lattice-reduction assisted variant would slot
 * in behind the same interface.
 */
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::vector<Integer> diag; // nonzero elementary divisors only

    std::size_t rank() const noexcept { return diag.size(); }
    // U * A * V as a full matrix.
    IntMatrix normal_form(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Columns form a saturated Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Left inverse L of a matrix K whose columns are a saturated family
// (L * K = I). Throws NotChainCompatible if K is not saturated.
IntMatrix left_inverse(const IntMatrix& k);

// Inverse of a square unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

} // namespace tdmono::lattice
