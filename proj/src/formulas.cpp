#include "modcohom/formulas.hpp"

#include "modcohom/poly_rep.hpp"

#include <stdexcept>
#include <string>

namespace modcohom::formulas {

namespace {

void require_even(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("closed forms need even n, got " + std::to_string(n));
}

// (-1)^{n/2 + 1}
long sigma(unsigned n) { return (n / 2) % 2 == 0 ? -1 : 1; }

long exact_div(long num, long den, const char* what) {
    if (num % den != 0)
        throw std::domain_error(std::string(what) + ": " + std::to_string(num) + " not divisible by " + std::to_string(den));
    return num / den;
}

}  // namespace

long rank_psl2(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 1 + 3 * sigma(n) - 4 * eta(n), 6, "rank_psl2");
}

long rank_gl2(unsigned n) {
    require_even(n);
    return exact_div(long(n) - 5 + 3 * sigma(n) - 4 * eta(n), 12, "rank_gl2");
}

long restriction_cokernel_rank(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 7 + 3 * sigma(n) - 4 * eta(n), 12, "restriction_cokernel_rank");
}

long m0(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 1 + sigma(n), 2, "m0");
}

long n0(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 1 + 2 * eta(n), 3, "n0");
}

long z10w_dim(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 1 + sigma(n), 4, "z10w_dim");
}

long pn0_dim(unsigned n) {
    require_even(n);
    return exact_div(long(n) + 4 + 2 * eta(n), 6, "pn0_dim");
}

long beps_count(unsigned n) {
    require_even(n);
    return n % 4 == 0 ? long(n) / 4 : (long(n) + 2) / 4;
}

}  // namespace modcohom::formulas
