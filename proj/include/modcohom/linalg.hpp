#pragma once

#include "modcohom/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modcohom {

// U * A * V = S with U, V unimodular and S = diag(d_1 | d_2 | ... | d_r, 0, ...),
// d_i > 0. U_inv is tracked alongside U so that basis changes of the target
// lattice are available without a separate inversion.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    IntMatrix U_inv;
    std::size_t rank = 0;

    // The nonzero invariant factors d_1, ..., d_rank.
    Vector invariant_factors() const;
};

struct HermiteDecomposition {
    IntMatrix H;  // row-style Hermite form, U * A = H
    IntMatrix U;
    std::size_t rank = 0;
};

// Invariant-factor description of a finitely generated abelian group.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // each entry > 1, each divides the next

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // Number of torsion factors divisible by `p`.
    std::size_t count_divisible_by(long p) const;
    std::string to_string() const;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);
HermiteDecomposition hermite_normal_form(const IntMatrix& a);

// Columns form a Z-basis of {v : A v = 0}, in a canonical (Hermite-reduced) shape.
IntMatrix kernel_basis(const IntMatrix& a);

// Z-basis (as columns) of the lattice spanned by the columns of `a`.
IntMatrix column_lattice_basis(const IntMatrix& a);

// Z^{rows(R)} / (column span of R).
AbelianInvariants cokernel_invariants(const IntMatrix& relations);

// (column lattice of K) / (column lattice of B). Throws std::domain_error when
// some column of B does not lie in the column lattice of K.
AbelianInvariants quotient_invariants(const IntMatrix& k, const IntMatrix& b);

std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b);

// Repeated integer solves against one fixed matrix; the Smith form is computed once.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntMatrix& a);

    std::optional<Vector> solve(const Vector& b) const;
    const SmithDecomposition& smith() const { return snf_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    SmithDecomposition snf_;
};

// Rank over Q (fraction-free elimination).
std::size_t rational_rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

// Inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace modcohom
