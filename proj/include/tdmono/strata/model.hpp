#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tdmono/lattice/int_matrix.hpp"

namespace tdmono::strata {

using lattice::IntMatrix;

// Sorted, 1-based component labels I = {i_1 < ... < i_m}.
using Subset = std::vector<int>;

std::string subset_label(const Subset& s);

// Orders by size first, then lexicographically: the order strata are listed in.
struct SizeThenLex {
    bool operator()(const Subset& a, const Subset& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/**
 * Chow data of one (possibly disconnected) stratum Y_I, modulo torsion.
 * CH^a is the free group Z^{ranks[a]} with its standard basis.
 *
 *   lefschetz[a] : CH^a -> CH^{a+1}        (ranks[a+1] x ranks[a]),  a < dim
 *   pairings[a]  : CH^a x CH^{dim-a} -> Z  (ranks[a] x ranks[dim-a]), x^T P y
 */
struct StratumChowData {
    int dim = 0;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> lefschetz;
    std::vector<IntMatrix> pairings;

    std::size_t rank(int a) const
    {
        return a < 0 || a > dim ? 0 : ranks[static_cast<std::size_t>(a)];
    }

    // xi^steps : CH^from -> CH^{from + steps}.
    IntMatrix lefschetz_power(int from, int steps) const;

    bool operator==(const StratumChowData&) const = default;
};

struct IncidenceKey {
    Subset from;
    Subset to;
    int degree = 0;

    auto operator<=>(const IncidenceKey&) const = default;
};

struct ModelFlags {
    bool claims_conditions_bc = false;
    bool claims_ordinary = false;

    bool operator==(const ModelFlags&) const = default;
};

/**
 * Combinatorial model of the special fibre Y = Y_1 u ... u Y_n of a strictly
 * semi-stable degeneration of relative dimension `dimension`.
 *
 * Restrictions go Y_I -> Y_{I u {s}} and preserve the Chow degree; Gysin maps
 * go Y_J -> Y_{J \ {s}} and raise it by one. Matrices are stored unsigned;
 * face signs are applied when the complexes are assembled.
 */
struct DegenerationModel {
    std::string name;
    int dimension = 0;
    int num_components = 0;
    std::map<Subset, StratumChowData, SizeThenLex> strata;
    std::map<IncidenceKey, IntMatrix> restrictions;
    std::map<IncidenceKey, IntMatrix> gysins;
    ModelFlags flags;

    int stratum_dim(const Subset& s) const { return dimension - static_cast<int>(s.size()) + 1; }
    const StratumChowData* stratum(const Subset& s) const;
    std::size_t chow_rank(const Subset& s, int degree) const;

    // Present strata with |I| = m, in lexicographic order.
    std::vector<Subset> strata_of_size(std::size_t m) const;

    const IntMatrix* restriction(const Subset& from, const Subset& to, int degree) const;
    const IntMatrix* gysin(const Subset& from, const Subset& to, int degree) const;

    bool operator==(const DegenerationModel&) const = default;
};

} // namespace tdmono::strata
