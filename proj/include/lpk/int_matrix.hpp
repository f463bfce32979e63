#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpk {

using Integer = mpz_class;

/// Dense row-major matrix of unbounded integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Row literal, e.g. {{2, 4}, {6, 8}}. All rows must have equal length.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool row_is_zero(std::size_t i) const;

    IntMatrix transpose() const;
    IntMatrix negated() const;
    /// Rows [first, first + count) as a new matrix.
    IntMatrix row_block(std::size_t first, std::size_t count) const;

    // Elementary operations used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Stack a on top of b (equal column counts).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal matrix diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntMatrix& m);

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent);

}  // namespace lpk
