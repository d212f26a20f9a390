#pragma once

#include <map>
#include <vector>

#include "tdmono/check_report.hpp"
#include "tdmono/complex/chow_complex.hpp"
#include "tdmono/lattice/forms.hpp"
#include "tdmono/lattice/homology.hpp"

namespace tdmono::complex {

using lattice::FgAbGroup;
using lattice::SubquotientPresentation;

// T^i_j = ker D^i_j / im D^{i-1}_j for every cell, with the maps N induces.
struct HomologyTable {
    int dimension = 0;
    std::map<CellIndex, SubquotientPresentation> groups;
    std::map<CellIndex, lattice::InducedMap> monodromy; // T^i_j -> T^{i+2}_{j-1}

    // Zero presentation outside the support.
    const SubquotientPresentation& at(int i, int j) const;
    const FgAbGroup& group(int i, int j) const { return at(i, j).group; }
};

// Throws CompositionNotZero if the complex is not a complex.
HomologyTable homology_table(const ChowComplex& cx);

// N^i : T^{-i}_{j+i} -> T^i_j on free parts.
struct IsogenyCertificate {
    int i = 0;
    int j = 0;
    FgAbGroup source;
    FgAbGroup target;
    IntMatrix induced;
    lattice::IsogenyVerdict verdict;
};

// Induced pairing T^i_j x T^{-i}_{d-j} -> Z on free parts.
struct PairingCertificate {
    int i = 0;
    int j = 0;
    IntMatrix gram;
    lattice::NondegeneracyVerdict verdict;
    bool well_defined = false; // cycles pair to zero with boundaries on both sides
};

struct DualityCertificates {
    std::vector<IsogenyCertificate> isogenies; // 0 <= i <= d, 0 <= j <= d - i
    std::vector<PairingCertificate> pairings;  // every cell of the support
    CheckReport checks;

    bool passed() const { return checks.passed(); }
};

// Checks that each N^i is an isogeny and each induced pairing is well
// defined and nondegenerate modulo torsion.
DualityCertificates certify_monodromy_and_duality(const ChowComplex& cx, const HomologyTable& t);

} // namespace tdmono::complex
