#pragma once

#include "modcohom/certificate.hpp"
#include "modcohom/mat2.hpp"
#include "modcohom/presentation.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace modcohom {

bool gamma0_member(const Mat2& g, const Integer& n);
bool gamma1_member(const Mat2& g, const Integer& n);

// g v - v for v = (1/N, 0): ((a - 1)/N, c/N).
struct BNValue {
    mpq_class first;
    mpq_class second;
    bool integral = false;
};
BNValue bN(const Mat2& g, const Integer& n);

bool is_prime(long p);
// Euler's criterion; p an odd prime.
int legendre(const Integer& a, long p);

// Right action of PSL2Z on P^1(F_p) by x.g = g^-1 x. Point x < p stands for
// (x : 1) and point p for (1 : 0), the base point, whose stabilizer is the
// image of Gamma_0(p).
struct CosetTable {
    long p = 0;
    std::size_t base = 0;
    // action[0] for S, action[1] for T: action[g][x] = x.g
    std::vector<std::vector<std::size_t>> action;
    // transversal[x] is a word in S, T (PSL2Z generators) with base.word = x
    std::vector<Word> transversal;

    std::size_t size() const { return action.empty() ? 0 : action[0].size(); }
    std::size_t act(std::size_t x, const Word& w) const;
};

CosetTable coset_table(long p);

// p > 3 prime: true iff the image of Gamma_0(p) in PSL2Z has no elements of
// order 2 or 3.
bool torsion_criterion(long p);

struct TorsionElement {
    Mat2 element;
    int order = 0;  // 2 or 3, as an element of PSL2Z
};
std::optional<TorsionElement> find_torsion(long p);

struct FreeBasis {
    long p = 0;
    std::vector<Word> words;     // in the generators S, T of PSL2Z
    std::vector<Mat2> matrices;  // evaluated with the integral lifts s, t
};

// Reidemeister-Schreier basis of the image of Gamma_0(p); needs
// torsion_criterion(p). The size is 1 + (p + 1)/6.
FreeBasis schreier_free_basis(long p);

// Overgroup shape: presentation, 2x2 matrices for its generators and the
// words expressing the subgroup generators.
struct OvergroupSpec {
    std::string name;
    Presentation presentation;
    MatrixAssignment matrices;
    std::vector<Word> words;

    Overgroup with_rep(unsigned n) const;
};

// A free subgroup K of SL2Z obtained by lifting a free basis of PSL2Z.
struct LiftedSubgroup {
    Presentation presentation;  // free on k1, ..., kk
    MatrixAssignment matrices;
    std::vector<Word> words;    // in the generators s, t of SL2Z
    std::vector<OvergroupSpec> overgroups;  // K x <eps>, SL2Z
};
LiftedSubgroup lift_to_sl2(const FreeBasis& basis);

nlohmann::json to_json(const CosetTable& t);
nlohmann::json to_json(const FreeBasis& b);

}  // namespace modcohom
