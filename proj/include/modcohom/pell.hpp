#pragma once

#include "modcohom/int_matrix.hpp"

#include <optional>
#include <vector>

namespace modcohom {

struct CFExpansion {
    Integer a0;
    std::vector<Integer> period;
};

// Continued fraction of sqrt(D); D > 1 not a square.
CFExpansion cf_sqrt(const Integer& d);

// x^2 - D y^2 = norm with x, y > 0.
struct PellSolution {
    Integer x;
    Integer y;
    Integer norm;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

PellSolution pell_plus(const Integer& d);
std::optional<PellSolution> pell_minus(const Integer& d);
// Fundamental solution of t^2 - D s^2 = 4.
PellSolution pell4(const Integer& d);

// alpha u + beta y = 0 (mod modulus)
struct Congruence {
    Integer alpha;
    Integer beta;
    Integer modulus;

    bool holds(const Integer& u, const Integer& y) const;
};

struct NormSolution {
    Integer u;
    Integer y;

    friend bool operator==(const NormSolution&, const NormSolution&) = default;
    friend auto operator<=>(const NormSolution& a, const NormSolution& b) {
        if (auto c = cmp(a.y, b.y); c != 0) return c <=> 0;
        return cmp(a.u, b.u) <=> 0;
    }
};

// Solutions of u^2 - D y^2 = N passing every filter, given as representatives
// modulo the automorph (u, y) -> (x u + D z y, z u + x y) where
// (x, z) = `automorph`. Every filtered solution equals automorph^k applied to
// some representative, k in Z. An empty list means there is no solution.
struct NormEquationResult {
    Integer d;
    Integer n;
    std::vector<NormSolution> representatives;
    PellSolution automorph;
};

NormEquationResult solve_norm_equation(const Integer& d, const Integer& n, const std::vector<Congruence>& filters = {});

// Applies (x + z sqrt D)^k for the automorph (x, z), k in Z.
NormSolution apply_automorph(const PellSolution& automorph, const Integer& d, NormSolution s, long k);

// Exhaustive search with |u|, |y| <= bound.
std::vector<NormSolution> brute_solve(const Integer& d, const Integer& n, const Integer& bound);

bool is_square(const Integer& x);

}  // namespace modcohom
