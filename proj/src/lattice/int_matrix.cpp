#include "tdmono/lattice/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "tdmono/error.hpp"

namespace tdmono::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged initializer list");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has " +
                                    std::to_string(rows[r].size()) + " entries, expected " +
                                    std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Integer>& entries)
{
    IntMatrix m(entries.size(), 1);
    for (std::size_t r = 0; r < entries.size(); ++r)
        m(r, 0) = entries[r];
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (sgn(v) != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionMismatch("block out of range");
    IntMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            b(r, c) = (*this)(row0 + r, col0 + c);
    return b;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const
{
    return block(0, first, rows_, count);
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const
{
    return block(first, 0, count, cols_);
}

std::vector<Integer> IntMatrix::col(std::size_t c) const
{
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void IntMatrix::add_block(std::size_t row0, std::size_t col0, const IntMatrix& m, long sign)
{
    if (row0 + m.rows() > rows_ || col0 + m.cols() > cols_)
        throw DimensionMismatch("add_block out of range");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sign >= 0)
                (*this)(row0 + r, col0 + c) += m(r, c);
            else
                (*this)(row0 + r, col0 + c) -= m(r, c);
        }
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix n(*this);
    for (auto& v : n.data_)
        v = -v;
    return n;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum of incompatible shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference of incompatible shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar)
{
    for (auto& v : data_)
        v *= scalar;
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                p(i, j) += aik * b(k, j);
        }
    return p;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("matrix-vector product of incompatible shapes");
    std::vector<Integer> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            y[i] += a(i, k) * x[k];
    return y;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            os << ',';
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ',';
            os << m(r, c).get_str();
        }
        os << ']';
    }
    return os << ']';
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hconcat row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    m.add_block(0, 0, a);
    m.add_block(0, a.cols(), b);
    return m;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vconcat column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    m.add_block(0, 0, a);
    m.add_block(a.rows(), 0, b);
    return m;
}

namespace {

// Fraction-free Gaussian elimination with row pivoting. Returns the rank and
// leaves `sign * last pivot` equal to the determinant when the matrix is
// square and of full rank.
std::size_t bareiss(IntMatrix& m, int& sign)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t rank = 0;
    sign = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m(pivot, c)) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(pivot, k), m(rank, k));
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m(r, k) = m(rank, c) * m(r, k) - m(r, c) * m(rank, k);
                mpz_divexact(m(r, k).get_mpz_t(), m(r, k).get_mpz_t(), prev.get_mpz_t());
            }
            m(r, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

} // namespace

Integer determinant(const IntMatrix& a)
{
    if (!a.is_square())
        throw NotSquare("determinant of a " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " matrix");
    if (a.rows() == 0)
        return 1;
    IntMatrix m(a);
    int sign = 1;
    if (bareiss(m, sign) < a.rows())
        return 0;
    const std::size_t n = a.rows() - 1;
    return sign * m(n, n);
}

std::size_t rank(const IntMatrix& a)
{
    IntMatrix m(a);
    int sign = 1;
    return bareiss(m, sign);
}

} // namespace tdmono::lattice
