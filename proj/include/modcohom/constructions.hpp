#pragma once

#include "modcohom/cohomology.hpp"

#include <vector>

namespace modcohom {

// b(S) = a (X^n - Y^n), b(T) = 0 on the two-generator presentations of
// PSL2Z / SL2Z. Needs even n.
Cocycle make_ba(unsigned n, const Integer& a);

// Cocycle on the three-generator presentations of PGL2Z / GL2Z with
// b(T) = b(W) = 0 and b(S) a symmetric sum of the odd-index monomial pairs
// selected by eps (plus the middle monomial for n = 2 mod 4).
// eps.size() must equal formulas::beps_count(n).
Cocycle make_beps(unsigned n, const std::vector<bool>& eps);

// Given a cocycle b on PSL2Z (or SL2Z) for rho_n, returns 3 b' where b' is the
// rationally cohomologous cocycle with b'(T) = 0:
//   b' = b + d(w0),  w0 = (1/3)(T + 2) b(T).
Cocycle normalize_at_T(const Cocycle& b, unsigned n);

// Rank of H^1(PSL2Z, P_n(Q))^W computed from the W-action on cocycles
// normalized at T. Independent of the presentation route for GL2Z.
// Throws std::domain_error if S and T have a common fixed vector.
long w_invariant_h1_rank(unsigned n);

// dim over Q of {u : (S + 1) u = 0, (W - 1) u = 0}.
std::size_t normalized_w_cocycle_dim(unsigned n);

}  // namespace modcohom
