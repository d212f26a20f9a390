#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tdmono/check_report.hpp"
#include "tdmono/strata/model.hpp"

namespace tdmono::complex {

using lattice::IntMatrix;
using strata::Subset;

// One stratum Y_I inside a summand, with its offset relative to the summand.
struct Piece {
    Subset stratum;
    std::size_t offset = 0;
    std::size_t width = 0;
};

/**
 * Summand C^{i,k}_j = CH^{i+j-k}(Y^{(2k-i+1)}) of a cell. Y^{(m)} is the
 * disjoint union of the present strata with |I| = m in lexicographic order.
 */
struct Summand {
    int k = 0;
    int stratum_size = 0; // m = 2k - i + 1
    int chow_degree = 0;  // a = i + j - k
    std::size_t offset = 0;
    std::size_t width = 0;
    std::vector<Piece> pieces;

    const Piece* piece(const Subset& s) const;
};

struct Cell {
    int i = 0;
    int j = 0;
    std::vector<Summand> summands; // ascending k
    std::size_t rank = 0;

    const Summand* summand(int k) const;
};

using CellIndex = std::pair<int, int>; // (i, j)

// Cells can be nonzero only for -d <= i <= d and -i <= j <= d - i.
bool in_support(int dimension, int i, int j);
std::vector<CellIndex> support(int dimension);

/**
 * The bigraded Chow complexes of a model with differential d = d' + d''
 * (d' from signed restrictions, d'' from signed Gysin maps), monodromy
 * N : C^i_j -> C^{i+2}_{j-1}, and pairings Q^i_j : C^i_j x C^{-i}_{d-j} -> Z.
 *
 * Accessors accept any (i, j); outside the support they return correctly
 * shaped zero matrices.
 */
class ChowComplex {
public:
    explicit ChowComplex(int dimension) : dimension_(dimension) {}

    int dimension() const noexcept { return dimension_; }

    const Cell& cell(int i, int j) const;
    std::size_t rank(int i, int j) const { return cell(i, j).rank; }

    IntMatrix differential(int i, int j) const; // D^i_j : C^i_j -> C^{i+1}_j
    IntMatrix theta(int i, int j) const;        // d' part
    IntMatrix delta(int i, int j) const;        // d'' part
    IntMatrix monodromy(int i, int j) const;    // N : C^i_j -> C^{i+2}_{j-1}
    IntMatrix pairing(int i, int j) const;      // Q^i_j, rank(i,j) x rank(-i,d-j)

    // N^p : C^i_j -> C^{i+2p}_{j-p}.
    IntMatrix monodromy_power(int i, int j, int p) const;

    // Human-readable name of basis vector `index` of C^i_j.
    std::string describe_basis(int i, int j, std::size_t index) const;

    bool has_differential() const noexcept { return !theta_.empty() || cells_.empty(); }

private:
    friend ChowComplex build_cells(const strata::DegenerationModel& m);
    friend void assemble_differential(const strata::DegenerationModel& m, ChowComplex& cx);
    friend void assemble_monodromy(const strata::DegenerationModel& m, ChowComplex& cx);
    friend void assemble_pairing(const strata::DegenerationModel& m, ChowComplex& cx);

    IntMatrix stored_or_zero(const std::map<CellIndex, IntMatrix>& table, int i, int j,
                             std::size_t rows, std::size_t cols) const;

    int dimension_;
    std::map<CellIndex, Cell> cells_;
    std::map<CellIndex, IntMatrix> theta_;
    std::map<CellIndex, IntMatrix> delta_;
    std::map<CellIndex, IntMatrix> monodromy_;
    std::map<CellIndex, IntMatrix> pairing_;
};

// Summand layout of every cell in the support (no maps yet).
ChowComplex build_cells(const strata::DegenerationModel& m);

// Throws MissingIncidence naming the face if a needed matrix is absent.
void assemble_differential(const strata::DegenerationModel& m, ChowComplex& cx);
void assemble_monodromy(const strata::DegenerationModel& m, ChowComplex& cx);
void assemble_pairing(const strata::DegenerationModel& m, ChowComplex& cx);

// build_cells followed by all three assemblers.
ChowComplex assemble(const strata::DegenerationModel& m);

// d^2 = 0, theta^2 = 0, delta^2 = 0, theta delta + delta theta = 0, N D = D N,
// (d'x, y) = (x, d''y), (d''x, y) = (x, d'y), and N^i = id on C^{-i}_{j+i}.
CheckReport check_chain_identities(const ChowComplex& cx);

} // namespace tdmono::complex
