#include "modcohom/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modcohom {

namespace {

// Quotient rounded towards zero; keeps |remainder| < |divisor|.
Integer tquot(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fquot(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool divides(const Integer& d, const Integer& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Records row operations applied to A on U (same ops) and U_inv (inverse ops
// on columns, in reverse sense), column operations on V.
struct SmithWork {
    IntMatrix a, u, v, u_inv;

    void swap_rows(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    // row(dst) += k row(src); inverse on U_inv: col(src) -= k col(dst)
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        a.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
        u_inv.add_col_multiple(src, dst, -k);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        a.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
    }
};

}  // namespace

Vector SmithDecomposition::invariant_factors() const {
    Vector d(rank);
    for (std::size_t i = 0; i < rank; ++i) d[i] = S(i, i);
    return d;
}

std::size_t AbelianInvariants::count_divisible_by(long p) const {
    return static_cast<std::size_t>(std::count_if(torsion.begin(), torsion.end(), [p](const Integer& d) {
        return mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    }));
}

std::string AbelianInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

SmithDecomposition smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m)};
    IntMatrix& a = w.a;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t pi = m, pj = n;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (sgn(a(i, j)) == 0) continue;
                if (pi == m || cmpabs(a(i, j), best) < 0) {
                    best = a(i, j);
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                w.add_row(i, t, -tquot(a(i, t), a(t, t)));
                if (sgn(a(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                w.add_col(j, t, -tquot(a(t, j), a(t, t)));
                if (sgn(a(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // Move the smallest leftover in row/column t onto the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) { bi = i; bj = t; }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) { bi = t; bj = j; }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // Row and column t are clear; enforce the divisibility chain.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(a(t, t), a(i, j))) { bad = i; break; }
            if (bad == m) break;
            w.add_row(t, bad, Integer(1));
        }
        if (sgn(a(t, t)) < 0) w.negate_row(t);
    }
    return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.u_inv), t};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    IntMatrix h = input;
    IntMatrix u = IntMatrix::identity(m);
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
        h.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i)
                if (sgn(h(i, c)) != 0 && (piv == m || cmpabs(h(i, c), h(piv, c)) < 0)) piv = i;
            if (piv == m) break;
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (sgn(h(i, c)) == 0) continue;
                add_row(i, r, -tquot(h(i, c), h(r, c)));
                if (sgn(h(i, c)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (sgn(h(r, c)) == 0) continue;
        if (sgn(h(r, c)) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i)
            if (sgn(h(i, c)) != 0) add_row(i, r, -fquot(h(i, c), h(r, c)));
        ++r;
    }
    return HermiteDecomposition{std::move(h), std::move(u), r};
}

IntMatrix kernel_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    if (n == 0) return IntMatrix(0, 0);
    if (a.rows() == 0) return IntMatrix::identity(n);
    HermiteDecomposition hd = hermite_normal_form(a.transpose());
    const std::size_t nullity = n - hd.rank;
    if (nullity == 0) return IntMatrix(n, 0);
    // Rows rank..n-1 of U span the left kernel of A^T; reduce them to Hermite form.
    HermiteDecomposition canon = hermite_normal_form(hd.U.row_block(hd.rank, nullity));
    return canon.H.row_block(0, canon.rank).transpose();
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    if (a.cols() == 0) return IntMatrix(a.rows(), 0);
    HermiteDecomposition hd = hermite_normal_form(a.transpose());
    return hd.H.row_block(0, hd.rank).transpose();
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations) {
    AbelianInvariants inv;
    if (relations.cols() == 0) {
        inv.free_rank = relations.rows();
        return inv;
    }
    SmithDecomposition snf = smith_normal_form(relations);
    inv.free_rank = relations.rows() - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.S(i, i) != 1) inv.torsion.push_back(snf.S(i, i));
    return inv;
}

AbelianInvariants quotient_invariants(const IntMatrix& k, const IntMatrix& b) {
    if (b.cols() > 0 && b.rows() != k.rows()) throw std::invalid_argument("quotient_invariants: row count mismatch");
    IntMatrix basis = column_lattice_basis(k);
    const std::size_t r = basis.cols();
    if (b.cols() == 0 || r == 0) {
        if (b.cols() > 0 && !b.is_zero()) throw std::domain_error("quotient_invariants: B is not contained in K");
        AbelianInvariants inv;
        inv.free_rank = r;
        return inv;
    }
    IntegerSolver solver(basis);
    IntMatrix coords(r, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto x = solver.solve(b.column(j));
        if (!x) throw std::domain_error("quotient_invariants: column " + std::to_string(j) + " of B is not in the lattice of K");
        coords.set_column(j, *x);
    }
    return cokernel_invariants(coords);
}

IntegerSolver::IntegerSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<Vector> IntegerSolver::solve(const Vector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    Vector c = snf_.U * b;
    Vector y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < snf_.rank) {
            const Integer& d = snf_.S(i, i);
            if (!divides(d, c[i])) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
        } else if (sgn(c[i]) != 0) {
            return std::nullopt;
        }
    }
    return snf_.V * y;
}

std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b) {
    return IntegerSolver(a).solve(b);
}

namespace {

// Bareiss elimination; returns rank, leaves the last pivot (signed) in `det`
// when the matrix is square and of full rank.
std::size_t bareiss(IntMatrix m, Integer* det) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(m(i, c)) != 0) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r) {
            m.swap_rows(piv, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    if (det) *det = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
    return r;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    return bareiss(a, nullptr);
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (a.rows() == 0) return 1;
    Integer d;
    bareiss(a, &d);
    return d;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::domain_error("unimodular_inverse: matrix not square");
    SmithDecomposition snf = smith_normal_form(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (i >= snf.rank || snf.S(i, i) != 1) throw std::domain_error("unimodular_inverse: determinant is not +-1");
    // U A V = I  =>  A^{-1} = V U
    return snf.V * snf.U;
}

}  // namespace modcohom
