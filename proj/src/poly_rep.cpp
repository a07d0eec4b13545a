#include "modcohom/poly_rep.hpp"

#include "modcohom/linalg.hpp"

#include <stdexcept>

namespace modcohom {

namespace {

// Coefficients of (x X + y Y)^e, indexed by the power of Y.
Vector linear_power(const Integer& x, const Integer& y, unsigned e) {
    Vector out(e + 1);
    Integer xp = 1;
    std::vector<Integer> ypow(e + 1);
    ypow[0] = 1;
    for (unsigned i = 1; i <= e; ++i) ypow[i] = ypow[i - 1] * y;
    for (unsigned j = e + 1; j-- > 0;) {
        out[j] = binomial(e, j) * xp * ypow[j];
        xp *= x;
    }
    return out;
}

IntMatrix shifted_identity(const IntMatrix& m, long shift) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += shift;
    return r;
}

}  // namespace

HomogPoly::HomogPoly(unsigned n, Vector c) : degree(n), coeffs(std::move(c)) {
    if (coeffs.size() != n + 1) throw std::invalid_argument("HomogPoly: need n+1 coefficients");
}

HomogPoly HomogPoly::monomial(unsigned n, unsigned k, long coeff) {
    if (k > n) throw std::invalid_argument("HomogPoly::monomial: k > n");
    HomogPoly p = zero(n);
    p.coeffs[k] = coeff;
    return p;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

IntMatrix rho_matrix(const Mat2& a, unsigned n) {
    IntMatrix m(n + 1, n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Vector first = linear_power(a.a11, a.a21, n - k);
        Vector second = linear_power(a.a12, a.a22, k);
        for (unsigned i = 0; i < first.size(); ++i) {
            if (sgn(first[i]) == 0) continue;
            for (unsigned j = 0; j < second.size(); ++j)
                if (sgn(second[j]) != 0)
                    mpz_addmul(m(i + j, k).get_mpz_t(), first[i].get_mpz_t(), second[j].get_mpz_t());
        }
    }
    return m;
}

HomogPoly act(const Mat2& a, const HomogPoly& p) {
    return HomogPoly(p.degree, rho_matrix(a, p.degree) * p.coeffs);
}

// Only the diagonal is needed: entry (k, k) is the Y^k coefficient of
// column k, so the full matrix is never formed.
Integer rep_trace(const Mat2& a, unsigned n) {
    Integer tr;
    for (unsigned k = 0; k <= n; ++k) {
        const Vector first = linear_power(a.a11, a.a21, n - k);
        const Vector second = linear_power(a.a12, a.a22, k);
        for (unsigned i = 0; i < first.size() && i <= k; ++i)
            if (k - i < second.size()) tr += first[i] * second[k - i];
    }
    return tr;
}

int eta(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("eta: n must be even");
    switch (n % 3) {
        case 0: return 1;
        case 1: return -1;
        default: return 0;
    }
}

Integer alt_diagonal_sum(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("alt_diagonal_sum: n must be even");
    Integer sum;
    for (unsigned k = 0; k <= n / 2; ++k) {
        if (k % 2 == 0) sum += binomial(n - k, k);
        else sum -= binomial(n - k, k);
    }
    return sum;
}

std::size_t common_fixed_dim(std::span<const IntMatrix> mats) {
    if (mats.empty()) return 0;
    const std::size_t d = mats.front().rows();
    IntMatrix stacked(0, d);
    for (const auto& m : mats) {
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("common_fixed_dim: matrices must be square of equal size");
        stacked = vstack(stacked, shifted_identity(m, -1));
    }
    return d - rational_rank(stacked);
}

std::pair<IntMatrix, IntMatrix> w_split(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("w_split: n must be even");
    IntMatrix w = rho_matrix(gens::w(), n);
    return {kernel_basis(shifted_identity(w, -1)), kernel_basis(shifted_identity(w, 1))};
}

}  // namespace modcohom
