#pragma once

#include "tdmono/lattice/int_matrix.hpp"

namespace tdmono::lattice {

struct NondegeneracyVerdict {
    bool nondegenerate = false;
    Integer discriminant; // |det P|
};

// Throws NotSquare for a non-square Gram matrix.
NondegeneracyVerdict gram_nondegenerate(const IntMatrix& p);

// Positive definiteness by exact leading principal minors. Throws NotSymmetric.
bool positive_definite(const IntMatrix& p);

// Leading principal minors det(P[0..k, 0..k]) for k = 1..n.
std::vector<Integer> leading_principal_minors(const IntMatrix& p);

} // namespace tdmono::lattice
