#include "lpk/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lpk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged row literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n = *this;
    for (auto& v : n.data_) v = -v;
    return n;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("IntMatrix::row_block");
    IntMatrix b(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
    return b;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix: sum dimension mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + b.negated(); }

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: matrix is not square");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

}  // namespace lpk
