#pragma once

#include <string>
#include <vector>

#include "tdmono/check_report.hpp"
#include "tdmono/complex/homology_table.hpp"
#include "tdmono/strata/model.hpp"

namespace tdmono::report {

using lattice::Integer;

// E^{p,q} with q = 2j. Odd rows are never listed: they vanish modulo torsion.
struct PageEntry {
    int p = 0;
    int q = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion; // E2 only
    int twist = 0;                // -j
};

// Gr^M_{level} H^n with level = -i, coming from T^i_j, n = i + 2j.
struct GradedPiece {
    int n = 0;
    int i = 0;
    int j = 0;
    int level = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    int tate_twist = 0; // -j
    int weight = 0;     // 2j, the weight of Frobenius on the piece
    int slope = 0;      // j
};

// hodge[p][q] = h^{p,q} = rank T^{q-p}_p for 0 <= p, q <= d.
using HodgeTable = std::vector<std::vector<std::size_t>>;

std::vector<PageEntry> e1_page(const complex::ChowComplex& cx);
std::vector<PageEntry> e2_page(const complex::HomologyTable& t);

// Throws DegreeOutOfRange unless 0 <= n <= 2d.
std::vector<GradedPiece> monodromy_graded(const complex::HomologyTable& t, int n);

std::vector<std::size_t> betti_numbers(const complex::HomologyTable& t);
HodgeTable hodge_numbers(const complex::HomologyTable& t);

// h^{n,0} <= h^{n-1,1} <= ... up to the middle of each diagonal p + q = n
// (entries outside the table count as 0), plus h^{p,q} = h^{q,p}.
CheckReport check_hodge_inequalities(const HodgeTable& h);

// N^i between levels +i and -i of each H^n, from the isogeny certificates.
CheckReport check_weight_monodromy(const complex::DualityCertificates& cert);

// Euler characteristic from E1 and from E2 agree.
CheckReport check_euler(const complex::ChowComplex& cx, const complex::HomologyTable& t);

// b_n = b_{2d-n}, rank T^i_j = rank T^{-i}_{d-j} = rank T^{-i}_{j+i}.
CheckReport check_duality(const complex::HomologyTable& t);

// No odd rows on either page and no graded piece of the wrong parity.
CheckReport check_parity(const std::vector<PageEntry>& e1, const std::vector<PageEntry>& e2,
                         const std::vector<std::vector<GradedPiece>>& graded);

struct CohomologyReport {
    std::string model_name;
    int dimension = 0;
    std::vector<PageEntry> e1;
    std::vector<PageEntry> e2;
    std::vector<std::vector<GradedPiece>> graded; // indexed by n
    std::vector<std::size_t> betti;
    HodgeTable hodge;
    complex::DualityCertificates certificates;
    std::vector<CheckReport> verdicts;
    std::vector<std::string> declared_conditions;

    bool passed() const;
};

// Full pipeline on a model that passes strata::validate_all.
CohomologyReport build_report(const strata::DegenerationModel& m);

} // namespace tdmono::report
