#include "doctest.h"
#include "support.hpp"

#include "modcohom/poly_rep.hpp"

using namespace modcohom;

namespace {

// Dehomogenized at X = 1: a degree-n form is its list of Y coefficients.
using Poly = std::vector<Integer>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// P((X, Y) A) by direct substitution, one monomial at a time.
Vector substitute(const Mat2& a, const Vector& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    const Poly first = {a.a11, a.a21};   // a11 X + a21 Y
    const Poly second = {a.a12, a.a22};  // a12 X + a22 Y
    Vector out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Poly term = {coeffs[k]};
        for (std::size_t i = 0; i < n - k; ++i) term = multiply(term, first);
        for (std::size_t i = 0; i < k; ++i) term = multiply(term, second);
        for (std::size_t i = 0; i <= n; ++i) out[i] += term[i];
    }
    return out;
}

long naive_eta(unsigned n) {
    if (n % 3 == 0) return 1;
    return n % 3 == 2 ? 0 : -1;
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("rho matrix matches direct substitution") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Mat2 a = testsupport::random_sl2(rng);
        std::uniform_int_distribution<unsigned> deg(0, 9);
        const unsigned n = deg(rng);
        const Vector p = testsupport::random_vector(rng, n + 1);
        CHECK(rho_matrix(a, n) * p == substitute(a, p));
        CHECK(act(a, HomogPoly(n, p)).coeffs == substitute(a, p));
    }
}

TEST_CASE("rho is a homomorphism") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat2 a = testsupport::random_sl2(rng), b = testsupport::random_sl2(rng);
        for (unsigned n : {1u, 2u, 5u, 8u}) CHECK(rho_matrix(a * b, n) == rho_matrix(a, n) * rho_matrix(b, n));
    }
    // GL2 elements too.
    const Mat2 w = gens::w();
    CHECK(rho_matrix(w * gens::s(), 4) == rho_matrix(w, 4) * rho_matrix(gens::s(), 4));
    CHECK(rho_matrix(Mat2::identity(), 6) == IntMatrix::identity(7));
}

TEST_CASE("small explicit representations") {
    // S = (0 -1; 1 0): X -> Y, Y -> -X.
    CHECK(rho_matrix(gens::s(), 1) == IntMatrix{{0, -1}, {1, 0}});
    CHECK(rho_matrix(gens::epsilon(), 3) == Integer(-1) * IntMatrix::identity(4));
    CHECK(rho_matrix(gens::epsilon(), 2) == IntMatrix::identity(3));
}

TEST_CASE("eta and the trace identity") {
    for (unsigned n = 0; n <= 60; n += 2) {
        CHECK(eta(n) == naive_eta(n));
        // Trace of the full matrix against the fast diagonal-only routine.
        IntMatrix r = rho_matrix(gens::t(), n);
        Integer tr = 0;
        for (std::size_t i = 0; i <= n; ++i) tr += r(i, i);
        CHECK(rep_trace(gens::t(), n) == tr);
        CHECK(tr == naive_eta(n));
        long sum = 0;
        for (long k = 0; k <= long(n) / 2; ++k) sum += (k % 2 ? -1 : 1) * binom(long(n) - k, k);
        CHECK(alt_diagonal_sum(n) == sum);
    }
}

TEST_CASE("common fixed space") {
    // (1 2; 0 1) fixes only the span of X^n.
    const std::vector<IntMatrix> u = {rho_matrix(Mat2::of(1, 2, 0, 1), 4)};
    CHECK(common_fixed_dim(u) == 1);
    const std::vector<IntMatrix> st = {rho_matrix(gens::s(), 4), rho_matrix(gens::t(), 4)};
    CHECK(common_fixed_dim(st) == 0);
}

TEST_CASE("binomial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}
