#include "modcohom/constructions.hpp"

#include "modcohom/formulas.hpp"
#include "modcohom/poly_rep.hpp"

#include <stdexcept>

namespace modcohom {

namespace {

IntMatrix shifted(const IntMatrix& m, long k) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += k;
    return r;
}

std::size_t nullity(const IntMatrix& m) { return m.cols() - rational_rank(m); }

}  // namespace

Cocycle make_ba(unsigned n, const Integer& a) {
    if (n % 2 != 0) throw std::invalid_argument("make_ba: n must be even");
    Cocycle b = Cocycle::zero(2, n + 1);
    b.values[0][0] = a;
    b.values[0][n] = -a;
    return b;
}

Cocycle make_beps(unsigned n, const std::vector<bool>& eps) {
    if (n % 2 != 0) throw std::invalid_argument("make_beps: n must be even");
    const auto m = static_cast<std::size_t>(formulas::beps_count(n));
    if (eps.size() != m)
        throw std::invalid_argument("make_beps: expected " + std::to_string(m) + " bits, got " + std::to_string(eps.size()));
    Cocycle b = Cocycle::zero(3, n + 1);
    Vector& bs = b.values[0];
    const bool middle = n % 4 == 2;
    for (std::size_t k = 1; k <= m; ++k) {
        if (!eps[k - 1]) continue;
        if (middle && k == m) {
            bs[n / 2] = 1;
        } else {
            bs[2 * k - 1] = 1;
            bs[n - 2 * k + 1] = 1;
        }
    }
    return b;
}

Cocycle normalize_at_T(const Cocycle& b, unsigned n) {
    if (b.values.size() != 2) throw std::invalid_argument("normalize_at_T: expected values on S and T");
    const IntMatrix S = rho_matrix(gens::s(), n);
    const IntMatrix T = rho_matrix(gens::t(), n);
    const Vector w = shifted(T, 2) * b.values[1];  // 3 w0
    Cocycle r;
    r.values.push_back(add(scale(3, b.values[0]), shifted(S, -1) * w));
    r.values.push_back(add(scale(3, b.values[1]), shifted(T, -1) * w));
    return r;
}

std::size_t normalized_w_cocycle_dim(unsigned n) {
    const IntMatrix S = rho_matrix(gens::s(), n);
    const IntMatrix W = rho_matrix(gens::w(), n);
    return nullity(vstack(shifted(S, 1), shifted(W, -1)));
}

long w_invariant_h1_rank(unsigned n) {
    const IntMatrix S = rho_matrix(gens::s(), n);
    const IntMatrix T = rho_matrix(gens::t(), n);
    const IntMatrix W = rho_matrix(gens::w(), n);
    const IntMatrix st[] = {S, T};
    if (common_fixed_dim(st) != 0) throw std::domain_error("w_invariant_h1_rank: S and T have a common fixed vector");

    // Normalized cocycles are determined by u = b(S) with (S + 1) u = 0 and W
    // acts by u -> W u. Normalized coboundaries are u = (S - 1) P with
    // P in ker(T - 1); that map is injective because there are no invariants,
    // so W-invariant coboundaries are counted in P-coordinates.
    const std::size_t cocycles = normalized_w_cocycle_dim(n);
    const IntMatrix fixed_t = kernel_basis(shifted(T, -1));
    const IntMatrix image = shifted(W, -1) * (shifted(S, -1) * fixed_t);
    const std::size_t coboundaries = nullity(image);
    return static_cast<long>(cocycles) - static_cast<long>(coboundaries);
}

}  // namespace modcohom
