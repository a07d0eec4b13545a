#include "modcohom/int_matrix.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace modcohom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const Vector& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vector IntMatrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector IntMatrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
    assert(first + count <= cols_);
    IntMatrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    assert(first + count <= rows_);
    IntMatrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) mpz_neg((*this)(i, k).get_mpz_t(), (*this)(i, k).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) mpz_neg((*this)(k, j).get_mpz_t(), (*this)(k, j).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const Integer& s = (*this)(src, c);
        if (sgn(s) != 0) mpz_addmul((*this)(dst, c).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const Integer& s = (*this)(r, src);
        if (sgn(s) != 0) mpz_addmul((*this)(r, dst).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
    }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Integer& bkj = b(k, j);
                if (sgn(bkj) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k * a(i, j);
    return c;
}

Vector operator*(const IntMatrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(v[j]) != 0 && sgn(a(i, j)) != 0) mpz_addmul(r[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
    return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Integer& k, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
    return r;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Integer dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    }
    return os << ']';
}

}  // namespace modcohom
