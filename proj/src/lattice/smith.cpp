#include "tdmono/lattice/smith.hpp"

#include <utility>

#include "tdmono/error.hpp"

namespace tdmono::lattice {

namespace {

// Working state of the reduction: A is transformed in place, and every
// elementary operation is mirrored onto U, U^{-1} (row ops) or V, V^{-1}
// (column ops).
class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& a)
        : a_(a), u_(IntMatrix::identity(a.rows())), u_inv_(u_), v_(IntMatrix::identity(a.cols())),
          v_inv_(v_) {}

    SmithDecomposition run()
    {
        const std::size_t rows = a_.rows();
        const std::size_t cols = a_.cols();
        std::size_t t = 0;
        while (t < rows && t < cols) {
            if (!move_smallest_to(t))
                break;
            for (;;) {
                bool clean = clear_column(t);
                clean = clear_row(t) && clean;
                if (!clean)
                    continue;
                // Pivot must divide every remaining entry for the divisor chain.
                std::size_t bad_r = rows;
                for (std::size_t r = t + 1; r < rows && bad_r == rows; ++r)
                    for (std::size_t c = t + 1; c < cols; ++c)
                        if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
                            bad_r = r;
                            break;
                        }
                if (bad_r == rows)
                    break;
                add_row(t, bad_r, 1);
            }
            if (sgn(a_(t, t)) < 0)
                negate_row(t);
            ++t;
        }
        SmithDecomposition out;
        for (std::size_t k = 0; k < t; ++k)
            out.diag.push_back(a_(k, k));
        out.U = std::move(u_);
        out.U_inv = std::move(u_inv_);
        out.V = std::move(v_);
        out.V_inv = std::move(v_inv_);
        return out;
    }

private:
    // Moves the entry of smallest absolute value in the trailing block to
    // (t, t). Returns false if the trailing block is zero.
    bool move_smallest_to(std::size_t t)
    {
        std::size_t br = a_.rows(), bc = a_.cols();
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) {
                if (sgn(a_(r, c)) == 0)
                    continue;
                if (br == a_.rows() || mpz_cmpabs(a_(r, c).get_mpz_t(), a_(br, bc).get_mpz_t()) < 0) {
                    br = r;
                    bc = c;
                }
            }
        if (br == a_.rows())
            return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    // Reduces column t below the pivot. Returns true if it ended up zero
    // without having to change the pivot.
    bool clear_column(std::size_t t)
    {
        bool clean = true;
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
            if (sgn(a_(r, t)) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
            add_row(r, t, -q);
            if (sgn(a_(r, t)) != 0) {
                swap_rows(t, r);
                clean = false;
                r = t; // restart scan with the smaller pivot
            }
        }
        return clean;
    }

    bool clear_row(std::size_t t)
    {
        bool clean = true;
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
            if (sgn(a_(t, c)) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
            add_col(c, t, -q);
            if (sgn(a_(t, c)) != 0) {
                swap_cols(t, c);
                clean = false;
                c = t;
            }
        }
        return clean;
    }

    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) += q * a_(j, c);
        for (std::size_t c = 0; c < u_.cols(); ++c)
            u_(i, c) += q * u_(j, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            u_inv_(r, j) -= q * u_inv_(r, i);
    }

    // col i += q * col j
    void add_col(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            a_(r, i) += q * a_(r, j);
        for (std::size_t r = 0; r < v_.rows(); ++r)
            v_(r, i) += q * v_(r, j);
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            v_inv_(j, c) -= q * v_inv_(i, c);
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a_.cols(); ++c)
            std::swap(a_(i, c), a_(j, c));
        for (std::size_t c = 0; c < u_.cols(); ++c)
            std::swap(u_(i, c), u_(j, c));
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            std::swap(u_inv_(r, i), u_inv_(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a_.rows(); ++r)
            std::swap(a_(r, i), a_(r, j));
        for (std::size_t r = 0; r < v_.rows(); ++r)
            std::swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            std::swap(v_inv_(i, c), v_inv_(j, c));
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) = -a_(i, c);
        for (std::size_t c = 0; c < u_.cols(); ++c)
            u_(i, c) = -u_(i, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            u_inv_(r, i) = -u_inv_(r, i);
    }

    IntMatrix a_, u_, u_inv_, v_, v_inv_;
};

} // namespace

IntMatrix SmithDecomposition::normal_form(std::size_t rows, std::size_t cols) const
{
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < diag.size(); ++k)
        d(k, k) = diag[k];
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    return SmithReducer(a).run();
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    SmithDecomposition snf = smith_normal_form(a);
    return snf.V.columns(snf.rank(), a.cols() - snf.rank());
}

IntMatrix left_inverse(const IntMatrix& k)
{
    // U K V = [I; 0]  =>  (V [I 0] U) K = I.
    SmithDecomposition snf = smith_normal_form(k);
    if (snf.rank() != k.cols())
        throw NotChainCompatible("columns are linearly dependent");
    for (const auto& d : snf.diag)
        if (d != 1)
            throw NotChainCompatible("column family is not saturated");
    return snf.V * snf.U.rows_range(0, k.cols());
}

IntMatrix unimodular_inverse(const IntMatrix& a)
{
    if (!a.is_square())
        throw NotSquare("inverse of a non-square matrix");
    SmithDecomposition snf = smith_normal_form(a);
    if (snf.rank() != a.rows())
        throw DimensionMismatch("matrix is singular");
    for (const auto& d : snf.diag)
        if (d != 1)
            throw DimensionMismatch("matrix is not unimodular");
    return snf.V * snf.U;
}

} // namespace tdmono::lattice
