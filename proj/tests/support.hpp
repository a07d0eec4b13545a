#pragma once

#include "modcohom/int_matrix.hpp"
#include "modcohom/mat2.hpp"

#include <random>

namespace testsupport {

inline modcohom::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo = -6, long hi = 6) {
    std::uniform_int_distribution<long> d(lo, hi);
    modcohom::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline modcohom::Vector random_vector(std::mt19937_64& rng, std::size_t n, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> d(lo, hi);
    modcohom::Vector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

// Random product of S, T and their inverses.
inline modcohom::Mat2 random_sl2(std::mt19937_64& rng, int max_len = 8) {
    using namespace modcohom;
    const Mat2 letters[] = {gens::s(), gens::s().inverse(), gens::t(), gens::t().inverse()};
    std::uniform_int_distribution<int> pick(0, 3), len(0, max_len);
    Mat2 g;
    for (int i = len(rng); i > 0; --i) g = g * letters[pick(rng)];
    return g;
}

}  // namespace testsupport
