#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace modcohom {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

// Dense arbitrary-precision integer matrix, row-major. Matrices act on the
// left of column vectors throughout the library.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static IntMatrix diagonal(const Vector& d);
    // Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);

    IntMatrix transpose() const;
    // Columns [first, first + count).
    IntMatrix column_block(std::size_t first, std::size_t count) const;
    IntMatrix row_block(std::size_t first, std::size_t count) const;

    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Elementary operations used by the normal form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row(dst) += k * row(src)
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    // col(dst) += k * col(src)
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);
Vector operator*(const IntMatrix& a, const Vector& v);

// [a | b], same row count.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
// [a ; b], same column count.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

Vector zero_vector(std::size_t n);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Integer& k, const Vector& v);
bool is_zero(const Vector& v);
// Row vector times column vector.
Integer dot(const Vector& a, const Vector& b);

std::string to_string(const IntMatrix& m);
std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace modcohom
