#pragma once

#include "modcohom/int_matrix.hpp"
#include "modcohom/mat2.hpp"

#include <span>
#include <utility>
#include <vector>

namespace modcohom {

// Homogeneous polynomial of degree n in X, Y; coeffs[k] multiplies X^{n-k} Y^k.
struct HomogPoly {
    unsigned degree = 0;
    Vector coeffs;

    HomogPoly() : coeffs(1) {}
    HomogPoly(unsigned n, Vector c);
    static HomogPoly zero(unsigned n) { return HomogPoly(n, Vector(n + 1)); }
    static HomogPoly monomial(unsigned n, unsigned k, long coeff = 1);

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;
};

// Matrix of P(X,Y) -> P((X,Y) A) on coefficient columns, (n+1) x (n+1).
// Column k is the expansion of (a11 X + a21 Y)^{n-k} (a12 X + a22 Y)^k.
IntMatrix rho_matrix(const Mat2& a, unsigned n);

HomogPoly act(const Mat2& a, const HomogPoly& p);

Integer rep_trace(const Mat2& a, unsigned n);

// 0, 1, -1 for n = 2, 0, 1 mod 3. Defined for even n only.
int eta(unsigned n);

// sum_{k=0}^{n/2} (-1)^k C(n-k, k), evaluated term by term.
Integer alt_diagonal_sum(unsigned n);

// Dimension over Q of the common fixed space of the given square matrices.
std::size_t common_fixed_dim(std::span<const IntMatrix> mats);

// Bases (as columns) of the symmetric and antisymmetric polynomials,
// i.e. ker(W - 1) and ker(W + 1) for W = rho_n(w).
std::pair<IntMatrix, IntMatrix> w_split(unsigned n);

Integer binomial(unsigned n, unsigned k);

}  // namespace modcohom
