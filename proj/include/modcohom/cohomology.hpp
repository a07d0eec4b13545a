#pragma once

#include "modcohom/linalg.hpp"
#include "modcohom/presentation.hpp"

#include <optional>
#include <vector>

namespace modcohom {

// A 1-cocycle given by its values on the generators of a presentation.
struct Cocycle {
    std::vector<Vector> values;

    static Cocycle zero(std::size_t generators, std::size_t dim);
    static Cocycle from_stacked(const Vector& stacked, std::size_t generators, std::size_t dim);
    Vector stacked() const;

    friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
    friend Cocycle operator-(const Cocycle& a, const Cocycle& b);
    friend Cocycle operator*(const Integer& k, const Cocycle& a);
    friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

struct H1Result {
    AbelianInvariants invariants;
    std::vector<Cocycle> free_basis;
    std::vector<std::pair<Cocycle, Integer>> torsion_basis;  // (lift, order)
};

// Coordinates of a class in H^1 = (+)_i Z/d_i (+) Z^r: torsion entries are
// reduced into [0, d_i), free entries are exact.
struct ClassCoordinates {
    Vector torsion;
    Vector free;

    bool is_zero() const { return modcohom::is_zero(torsion) && modcohom::is_zero(free); }
    friend bool operator==(const ClassCoordinates&, const ClassCoordinates&) = default;
    friend auto operator<=>(const ClassCoordinates& a, const ClassCoordinates& b) {
        if (auto c = a.torsion.size() <=> b.torsion.size(); c != 0) return c;
        for (std::size_t i = 0; i < a.torsion.size(); ++i)
            if (auto c = cmp(a.torsion[i], b.torsion[i]); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        for (std::size_t i = 0; i < a.free.size() && i < b.free.size(); ++i)
            if (auto c = cmp(a.free[i], b.free[i]); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.free.size() <=> b.free.size();
    }
};

// Z^1 / B^1 for a finitely presented group acting on Z^d. Holds the kernel
// basis of the relator conditions, the coboundary map and the Smith form of
// B^1 expressed in that basis, so that class membership questions reduce to
// exact integer solves.
class Cohomology {
public:
    Cohomology(Presentation p, Representation rep);

    const Presentation& presentation() const { return p_; }
    const Representation& representation() const { return rep_; }
    const H1Result& h1() const { return result_; }
    const IntMatrix& relator_matrix() const { return relators_; }
    // Columns: Z-basis of Z^1 in stacked coordinates.
    const IntMatrix& cocycle_basis() const { return z1_; }
    // Columns: images of the standard basis under P -> ((rho(g_i) - 1) P)_i.
    const IntMatrix& coboundary_matrix() const { return b1_; }

    bool is_cocycle(const Cocycle& b) const;
    Cocycle coboundary(const Vector& p) const;
    std::optional<Vector> coboundary_witness(const Cocycle& b) const;
    // nullopt means infinite order.
    std::optional<Integer> class_order(const Cocycle& b) const;
    ClassCoordinates class_coordinates(const Cocycle& b) const;
    Cocycle cocycle_from_basis(std::size_t column) const;

private:
    Presentation p_;
    Representation rep_;
    IntMatrix relators_;
    IntMatrix z1_;
    IntMatrix b1_;
    std::optional<IntegerSolver> z1_solver_;
    IntegerSolver b1_solver_;
    SmithDecomposition quotient_;
    std::vector<std::size_t> torsion_rows_;  // rows of the quotient SNF with d_i > 1
    H1Result result_;
};

// Stacked map P -> ((rho(g_i) - 1) P)_i; its column lattice is B^1.
IntMatrix coboundary_map(const Representation& rep);

H1Result h1(const Presentation& p, const Representation& rep);
std::optional<Vector> is_coboundary(const Presentation& p, const Representation& rep, const Cocycle& b);
std::optional<Integer> class_order(const Presentation& p, const Representation& rep, const Cocycle& b);

// b'(k_j) = b(word_j); `rep` is the representation of the ambient group.
Cocycle restrict_cocycle(const Cocycle& b, const std::vector<Word>& words, const Representation& rep);

// H^1(K) / image(H^1(L) -> H^1(K)), K embedded in L through `words`.
AbelianInvariants restriction_cokernel(const Presentation& l, const Presentation& k, const std::vector<Word>& words,
                                       const Representation& rep);

}  // namespace modcohom
