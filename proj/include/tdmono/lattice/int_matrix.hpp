#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tdmono::lattice {

using Integer = mpz_class;

/**
 * Dense matrix of arbitrary-precision integers, row-major, acting on column
 * vectors. The shape is fixed at construction.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    static IntMatrix column(const std::vector<Integer>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix transpose() const;
    IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix rows_range(std::size_t first, std::size_t count) const;
    std::vector<Integer> col(std::size_t c) const;

    // Adds `m` into the block whose top-left corner is (row0, col0).
    void add_block(std::size_t row0, std::size_t col0, const IntMatrix& m, long sign = 1);

    IntMatrix operator-() const;
    IntMatrix& operator+=(const IntMatrix& other);
    IntMatrix& operator-=(const IntMatrix& other);
    IntMatrix& operator*=(const Integer& scalar);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);

    bool operator==(const IntMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// [A | B] and [A ; B].
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

} // namespace tdmono::lattice
