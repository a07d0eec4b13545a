#include "doctest.h"
#include "support.hpp"

#include "modcohom/cohomology.hpp"
#include "modcohom/constructions.hpp"
#include "modcohom/formulas.hpp"
#include "modcohom/poly_rep.hpp"

using namespace modcohom;

namespace {

Cohomology make(const char* group, unsigned n) {
    const GroupData g = builtin(group);
    return Cohomology(g.presentation, Representation::polynomial(g.matrices, n));
}

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t len) {
    std::uniform_int_distribution<std::size_t> g(0, gens - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.letters.push_back({g(rng), sign(rng) ? 1 : -1});
    return w;
}

Cocycle random_cocycle(const Cohomology& c, std::mt19937_64& rng) {
    const IntMatrix& z = c.cocycle_basis();
    const Vector coeffs = testsupport::random_vector(rng, z.cols(), -3, 3);
    return Cocycle::from_stacked(z * coeffs, c.presentation().generator_count(), c.representation().dim);
}

// dim over Q of {v : m v = 0}
std::size_t nullity(const IntMatrix& m) { return m.cols() - rational_rank(m); }

}  // namespace

TEST_CASE("presentations hold for the built-in groups") {
    for (const char* name : {"PSL2Z", "SL2Z", "PGL2Z", "GL2Z"}) {
        const GroupData g = builtin(name);
        CHECK_MESSAGE(relators_hold(g.presentation, g.matrices), name);
    }
    CHECK(relators_hold(builtin_free(3).presentation, builtin_free(3).matrices));
    CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("word parsing round trip") {
    const Presentation p = builtin("GL2Z").presentation;
    const Word w = parse_word("s t^-1 w s", p);
    CHECK(w.size() == 4);
    CHECK(format_word(w, p) == "s t^-1 w s");
    CHECK((w * w.inverse()).freely_reduced().empty());
    CHECK_THROWS(parse_word("s q", p));
}

TEST_CASE("cocycle identity holds on random words") {
    std::mt19937_64 rng(31);
    for (const char* name : {"SL2Z", "GL2Z"}) {
        const Cohomology c = make(name, 4);
        const Representation& rep = c.representation();
        for (int trial = 0; trial < 10; ++trial) {
            const Cocycle b = random_cocycle(c, rng);
            CHECK(c.is_cocycle(b));
            const std::size_t k = c.presentation().generator_count();
            const Word g = random_word(rng, k, 5), h = random_word(rng, k, 5);
            const Vector lhs = cocycle_transport(g * h, rep, b.values);
            const Vector rhs = add(rep.image(g) * cocycle_transport(h, rep, b.values), cocycle_transport(g, rep, b.values));
            CHECK(lhs == rhs);
            // Relators evaluate to zero.
            for (const Word& r : c.presentation().relators) CHECK(is_zero(cocycle_transport(r, rep, b.values)));
        }
    }
}

TEST_CASE("Z1 for PSL2Z by a second route") {
    // On PSL2Z = <S, T | S^2, T^3> with rho_n (n even) the cocycle conditions
    // decouple: (1 + S) b(S) = 0 and (1 + T + T^2) b(T) = 0.
    for (unsigned n = 2; n <= 20; n += 2) {
        const Cohomology c = make("PSL2Z", n);
        const IntMatrix s = rho_matrix(gens::s(), n), t = rho_matrix(gens::t(), n);
        const IntMatrix id = IntMatrix::identity(n + 1);
        const std::size_t expected = nullity(id + s) + nullity(id + t + t * t);
        CHECK(c.cocycle_basis().cols() == expected);
        // Free rank of H^1 = dim Z^1 - dim B^1, and B^1 = (n+1) - dim of invariants.
        const std::vector<IntMatrix> images = {s, t};
        const std::size_t b1 = n + 1 - common_fixed_dim(images);
        CHECK(c.h1().invariants.free_rank == expected - b1);
    }
}

TEST_CASE("free groups: Z1 is everything") {
    const GroupData f = builtin_free(3);
    const Cohomology c(f.presentation, Representation::polynomial(f.matrices, 3));
    CHECK(c.cocycle_basis().cols() == 12);
    CHECK(c.h1().invariants.free_rank == 8);  // 12 - 4, no invariants
}

TEST_CASE("coboundaries are trivial classes") {
    std::mt19937_64 rng(32);
    const Cohomology c = make("GL2Z", 6);
    for (int trial = 0; trial < 10; ++trial) {
        const Vector p = testsupport::random_vector(rng, 7);
        const Cocycle b = c.coboundary(p);
        CHECK(c.is_cocycle(b));
        const auto w = c.coboundary_witness(b);
        REQUIRE(w.has_value());
        CHECK(c.coboundary(*w) == b);
        CHECK(c.class_coordinates(b).is_zero());
        REQUIRE(c.class_order(b).has_value());
        CHECK(*c.class_order(b) == 1);
    }
}

TEST_CASE("class coordinates are additive and torsion orders are exact") {
    std::mt19937_64 rng(33);
    const Cohomology c = make("SL2Z", 12);
    const H1Result& h = c.h1();
    for (const auto& [b, order] : h.torsion_basis) {
        REQUIRE(c.class_order(b).has_value());
        CHECK(*c.class_order(b) == order);
        CHECK(c.is_cocycle(order * b));
        CHECK(c.coboundary_witness(order * b).has_value());
    }
    for (const Cocycle& b : h.free_basis) CHECK_FALSE(c.class_order(b).has_value());
    // Coordinates change by a coboundary: nothing happens.
    const Cocycle b = random_cocycle(c, rng);
    const Cocycle shifted = b + c.coboundary(testsupport::random_vector(rng, 13));
    CHECK(c.class_coordinates(b) == c.class_coordinates(shifted));
}

TEST_CASE("odd degree: SL2Z classes have order 2") {
    const Cohomology c = make("SL2Z", 3);
    CHECK(c.h1().invariants.free_rank == 0);
    for (const auto& [b, order] : c.h1().torsion_basis) {
        CHECK(order == 2);
        CHECK(*class_order(c.presentation(), c.representation(), b) == 2);
    }
    CHECK(make("SL2Z", 1).h1().invariants.is_trivial());
}

TEST_CASE("b_a has infinite order on SL2Z") {
    for (unsigned n : {2u, 4u}) {
        const Cohomology c = make("SL2Z", n);
        const Cocycle b = make_ba(n, 1);
        CHECK(c.is_cocycle(b));
        CHECK_FALSE(c.class_order(b).has_value());
    }
}

TEST_CASE("non-cocycles are rejected") {
    const Cohomology c = make("PSL2Z", 4);
    Cocycle b = Cocycle::zero(2, 5);
    b.values[0][0] = 1;  // (1 + S) b(S) != 0
    CHECK_FALSE(c.is_cocycle(b));
}

TEST_CASE("restriction to a subgroup") {
    // The identity embedding: restriction cokernel vanishes.
    const GroupData g = builtin("SL2Z");
    const Representation rep = Representation::polynomial(g.matrices, 4);
    const std::vector<Word> words = {parse_word("s", g.presentation), parse_word("t", g.presentation)};
    CHECK(restriction_cokernel(g.presentation, g.presentation, words, rep).is_trivial());
    // GL2Z -> SL2Z has cokernel of free rank given by the closed form.
    const GroupData gl = builtin("GL2Z");
    for (unsigned n : {2u, 10u, 14u}) {
        const Representation r = Representation::polynomial(gl.matrices, n);
        const std::vector<Word> sw = {parse_word("s", gl.presentation), parse_word("t", gl.presentation)};
        CHECK(static_cast<long>(restriction_cokernel(gl.presentation, g.presentation, sw, r).free_rank) ==
              formulas::restriction_cokernel_rank(n));
    }
}

TEST_CASE("constructions") {
    CHECK_THROWS_AS(make_ba(3, 1), std::invalid_argument);
    const Cohomology gl = make("GL2Z", 10);
    for (int mask = 0; mask < 8; ++mask) {
        const std::vector<bool> eps = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
        CHECK(gl.is_cocycle(make_beps(10, eps)));
    }
    // normalize_at_T kills the value at T and stays in the same rational class.
    const Cohomology psl = make("PSL2Z", 8);
    std::mt19937_64 rng(34);
    const Cocycle b = random_cocycle(psl, rng);
    const Cocycle nb = normalize_at_T(b, 8);
    CHECK(is_zero(nb.values[1]));
    CHECK(psl.is_cocycle(nb));
    CHECK(psl.class_order(nb - Integer(3) * b).has_value());
}
