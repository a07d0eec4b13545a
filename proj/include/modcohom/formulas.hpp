#pragma once

// Closed-form dimensions attached to rho_n for even n. Every function throws
// std::invalid_argument for odd n and std::domain_error if a closed form
// fails to produce an integer.

namespace modcohom::formulas {

// Free rank of H^1(PSL2Z, P_n).
long rank_psl2(unsigned n);
// Free rank of H^1(GL2Z, P_n).
long rank_gl2(unsigned n);
// Free rank of the cokernel of restriction H^1(GL2Z) -> H^1(SL2Z).
long restriction_cokernel_rank(unsigned n);
// dim ker(S + 1).
long m0(unsigned n);
// dim ker(T - 1).
long n0(unsigned n);
// dim of W-invariant normalized cocycles, i.e. dim ker(S + 1) cap ker(W - 1).
long z10w_dim(unsigned n);
// dim ker(T - 1) cap ker(W - 1).
long pn0_dim(unsigned n);
// Number of independent order-2 classes b_eps in H^1(GL2Z, P_n).
long beps_count(unsigned n);

}  // namespace modcohom::formulas
