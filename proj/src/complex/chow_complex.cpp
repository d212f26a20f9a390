#include "tdmono/complex/chow_complex.hpp"

#include <algorithm>

#include "tdmono/error.hpp"

namespace tdmono::complex {

using strata::DegenerationModel;
using strata::subset_label;

const Piece* Summand::piece(const Subset& s) const
{
    for (const auto& p : pieces)
        if (p.stratum == s)
            return &p;
    return nullptr;
}

const Summand* Cell::summand(int k) const
{
    for (const auto& s : summands)
        if (s.k == k)
            return &s;
    return nullptr;
}

bool in_support(int dimension, int i, int j)
{
    return i >= -dimension && i <= dimension && j >= -i && j <= dimension - i;
}

std::vector<CellIndex> support(int dimension)
{
    std::vector<CellIndex> out;
    for (int i = -dimension; i <= dimension; ++i)
        for (int j = -i; j <= dimension - i; ++j)
            out.emplace_back(i, j);
    return out;
}

const Cell& ChowComplex::cell(int i, int j) const
{
    static const Cell empty;
    auto it = cells_.find({i, j});
    return it == cells_.end() ? empty : it->second;
}

IntMatrix ChowComplex::stored_or_zero(const std::map<CellIndex, IntMatrix>& table, int i, int j,
                                      std::size_t rows, std::size_t cols) const
{
    auto it = table.find({i, j});
    return it == table.end() ? IntMatrix(rows, cols) : it->second;
}

IntMatrix ChowComplex::theta(int i, int j) const
{
    return stored_or_zero(theta_, i, j, rank(i + 1, j), rank(i, j));
}

IntMatrix ChowComplex::delta(int i, int j) const
{
    return stored_or_zero(delta_, i, j, rank(i + 1, j), rank(i, j));
}

IntMatrix ChowComplex::differential(int i, int j) const
{
    return theta(i, j) + delta(i, j);
}

IntMatrix ChowComplex::monodromy(int i, int j) const
{
    return stored_or_zero(monodromy_, i, j, rank(i + 2, j - 1), rank(i, j));
}

IntMatrix ChowComplex::pairing(int i, int j) const
{
    return stored_or_zero(pairing_, i, j, rank(i, j), rank(-i, dimension_ - j));
}

IntMatrix ChowComplex::monodromy_power(int i, int j, int p) const
{
    IntMatrix out = IntMatrix::identity(rank(i, j));
    for (int s = 0; s < p; ++s)
        out = monodromy(i + 2 * s, j - s) * out;
    return out;
}

std::string ChowComplex::describe_basis(int i, int j, std::size_t index) const
{
    const Cell& c = cell(i, j);
    for (const auto& s : c.summands) {
        if (index < s.offset || index >= s.offset + s.width)
            continue;
        for (const auto& p : s.pieces) {
            const std::size_t local = index - s.offset;
            if (local >= p.offset && local < p.offset + p.width)
                return "k=" + std::to_string(s.k) + " CH^" + std::to_string(s.chow_degree) +
                       "(Y" + subset_label(p.stratum) + ")[" +
                       std::to_string(local - p.offset) + "]";
        }
    }
    return "index " + std::to_string(index);
}

ChowComplex build_cells(const DegenerationModel& m)
{
    const int d = m.dimension;
    ChowComplex cx(d);
    for (auto [i, j] : support(d)) {
        Cell c;
        c.i = i;
        c.j = j;
        for (int k = std::max(0, i); k <= i + j; ++k) {
            const int size = 2 * k - i + 1;
            const int a = i + j - k;
            if (size < 1 || size > d + 1 || a < 0 || a > d - size + 1)
                continue;
            Summand s;
            s.k = k;
            s.stratum_size = size;
            s.chow_degree = a;
            s.offset = c.rank;
            for (const auto& stratum : m.strata_of_size(static_cast<std::size_t>(size))) {
                const std::size_t w = m.chow_rank(stratum, a);
                s.pieces.push_back({stratum, s.width, w});
                s.width += w;
            }
            c.rank += s.width;
            c.summands.push_back(std::move(s));
        }
        cx.cells_.emplace(CellIndex{i, j}, std::move(c));
    }
    return cx;
}

namespace {

std::string face(const Subset& from, const Subset& to, int degree)
{
    return "(" + subset_label(from) + "->" + subset_label(to) + ", degree " +
           std::to_string(degree) + ")";
}

const IntMatrix& require_restriction(const DegenerationModel& m, const Subset& from,
                                     const Subset& to, int degree)
{
    const IntMatrix* r = m.restriction(from, to, degree);
    if (!r)
        throw MissingIncidence("restriction " + face(from, to, degree) + " is required");
    return *r;
}

const IntMatrix& require_gysin(const DegenerationModel& m, const Subset& from, const Subset& to,
                               int degree)
{
    const IntMatrix* g = m.gysin(from, to, degree);
    if (!g)
        throw MissingIncidence("Gysin map " + face(from, to, degree) + " is required");
    return *g;
}

} // namespace

void assemble_differential(const DegenerationModel& m, ChowComplex& cx)
{
    cx.theta_.clear();
    cx.delta_.clear();
    for (const auto& [index, src] : cx.cells_) {
        const auto [i, j] = index;
        const Cell& dst = cx.cell(i + 1, j);
        IntMatrix theta(dst.rank, src.rank);
        IntMatrix delta(dst.rank, src.rank);
        for (const auto& s : src.summands) {
            const int a = s.chow_degree;
            // d': restriction Y_I -> Y_J with J = I u {j_r}, sign (-1)^{r-1}.
            if (const Summand* t = dst.summand(s.k + 1)) {
                for (const auto& pi : s.pieces) {
                    for (const auto& pj : t->pieces) {
                        const Subset& big = pj.stratum;
                        if (!std::includes(big.begin(), big.end(), pi.stratum.begin(),
                                           pi.stratum.end()))
                            continue;
                        if (pi.width == 0 || pj.width == 0)
                            continue;
                        std::size_t r = 0;
                        while (std::binary_search(pi.stratum.begin(), pi.stratum.end(), big[r]))
                            ++r;
                        const long sign = r % 2 == 0 ? 1 : -1;
                        theta.add_block(t->offset + pj.offset, s.offset + pi.offset,
                                        require_restriction(m, pi.stratum, big, a), sign);
                    }
                }
            }
            // d'': Gysin Y_J -> Y_{J \ {j_r}}, sign (-1)^r.
            if (const Summand* t = dst.summand(s.k)) {
                for (const auto& pj : s.pieces) {
                    for (std::size_t r = 0; r < pj.stratum.size(); ++r) {
                        Subset small = pj.stratum;
                        small.erase(small.begin() + static_cast<long>(r));
                        const Piece* pi = t->piece(small);
                        if (!pi || pi->width == 0 || pj.width == 0)
                            continue;
                        const long sign = (r + 1) % 2 == 0 ? 1 : -1;
                        delta.add_block(t->offset + pi->offset, s.offset + pj.offset,
                                        require_gysin(m, pj.stratum, small, a), sign);
                    }
                }
            }
        }
        cx.theta_.emplace(index, std::move(theta));
        cx.delta_.emplace(index, std::move(delta));
    }
}

void assemble_monodromy(const DegenerationModel&, ChowComplex& cx)
{
    cx.monodromy_.clear();
    for (const auto& [index, src] : cx.cells_) {
        const auto [i, j] = index;
        const Cell& dst = cx.cell(i + 2, j - 1);
        IntMatrix n(dst.rank, src.rank);
        for (const auto& s : src.summands)
            if (const Summand* t = dst.summand(s.k + 1))
                n.add_block(t->offset, s.offset, IntMatrix::identity(s.width));
        cx.monodromy_.emplace(index, std::move(n));
    }
}

void assemble_pairing(const DegenerationModel& m, ChowComplex& cx)
{
    cx.pairing_.clear();
    const int d = cx.dimension();
    for (const auto& [index, left] : cx.cells_) {
        const auto [i, j] = index;
        const Cell& right = cx.cell(-i, d - j);
        IntMatrix q(left.rank, right.rank);
        const long sign = (i + j) % 2 == 0 ? 1 : -1;
        for (const auto& s : left.summands) {
            const Summand* t = right.summand(s.k - i);
            if (!t)
                continue;
            for (const auto& p : s.pieces) {
                const Piece* pr = t->piece(p.stratum);
                if (!pr || p.width == 0 || pr->width == 0)
                    continue;
                const auto& data = *m.stratum(p.stratum);
                q.add_block(s.offset + p.offset, t->offset + pr->offset,
                            data.pairings[static_cast<std::size_t>(s.chow_degree)], sign);
            }
        }
        cx.pairing_.emplace(index, std::move(q));
    }
}

ChowComplex assemble(const DegenerationModel& m)
{
    ChowComplex cx = build_cells(m);
    assemble_differential(m, cx);
    assemble_monodromy(m, cx);
    assemble_pairing(m, cx);
    return cx;
}

namespace {

std::string cell_label(int i, int j)
{
    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Locates the first nonzero entry of a map C^{si}_{sj} -> C^{ti}_{tj}.
std::string first_nonzero(const ChowComplex& cx, const IntMatrix& e, int si, int sj, int ti,
                          int tj)
{
    for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c)
            if (sgn(e(r, c)) != 0)
                return "entry " + e(r, c).get_str() + " from " + cx.describe_basis(si, sj, c) +
                       " to " + cx.describe_basis(ti, tj, r);
    return {};
}

} // namespace

CheckReport check_chain_identities(const ChowComplex& cx)
{
    CheckReport report;
    report.name = "chain-identities";
    const int d = cx.dimension();
    for (auto [i, j] : support(d)) {
        const std::string where = cell_label(i, j);
        const IntMatrix th = cx.theta(i, j), de = cx.delta(i, j);
        const IntMatrix th2 = cx.theta(i + 1, j), de2 = cx.delta(i + 1, j);
        auto expect_zero = [&](const char* code, const IntMatrix& e) {
            if (!e.is_zero())
                report.fail(code, where, first_nonzero(cx, e, i, j, i + 2, j));
        };
        expect_zero("d-squared", (th2 + de2) * (th + de));
        expect_zero("theta-squared", th2 * th);
        expect_zero("delta-squared", de2 * de);
        expect_zero("anticommutator", th2 * de + de2 * th);

        const IntMatrix nd = cx.monodromy(i + 1, j) * cx.differential(i, j);
        const IntMatrix dn = cx.differential(i + 2, j - 1) * cx.monodromy(i, j);
        if (nd != dn)
            report.fail("monodromy-commutes", where,
                        first_nonzero(cx, nd - dn, i, j, i + 3, j - 1));

        // theta^i_j is adjoint to delta^{-i-1}_{d-j}, and vice versa.
        const IntMatrix& q_src = cx.pairing(i, j);
        const IntMatrix q_dst = cx.pairing(i + 1, j);
        if (th.transpose() * q_dst != q_src * cx.delta(-i - 1, d - j))
            report.fail("pairing-adjoint-theta", where);
        if (de.transpose() * q_dst != q_src * cx.theta(-i - 1, d - j))
            report.fail("pairing-adjoint-delta", where);

        if (i <= 0) {
            // N^{-i} : C^i_j -> C^{-i}_{j+i} is the identity on the matched summands.
            const int p = -i;
            const IntMatrix np = cx.monodromy_power(i, j, p);
            const bool square = cx.rank(i, j) == cx.rank(-i, j + i);
            if (!square || !np.is_identity())
                report.fail("monodromy-power-identity", where,
                            "N^" + std::to_string(p) + " into " + cell_label(-i, j + i) +
                                " is not the identity");
        }
    }
    return report;
}

} // namespace tdmono::complex
