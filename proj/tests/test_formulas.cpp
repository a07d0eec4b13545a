#include "doctest.h"

#include "modcohom/formulas.hpp"
#include "modcohom/verify.hpp"

#include <stdexcept>

using namespace modcohom;

TEST_CASE("closed forms at small n") {
    using namespace formulas;
    CHECK(rank_psl2(2) == 1);
    CHECK(rank_psl2(4) == 1);
    CHECK(rank_psl2(10) == 3);
    for (unsigned n : {2u, 4u, 6u, 8u, 12u}) CHECK(rank_gl2(n) == 0);
    CHECK(rank_gl2(10) == 1);
    CHECK(restriction_cokernel_rank(2) == 1);
    CHECK(m0(2) == 2);
    CHECK(n0(2) == 1);
    CHECK(m0(6) == 4);
    CHECK(n0(6) == 3);
    CHECK(beps_count(4) == 1);
    CHECK(beps_count(6) == 2);
    CHECK_THROWS_AS(rank_psl2(3), std::invalid_argument);
    CHECK_THROWS_AS(beps_count(1), std::invalid_argument);
}

TEST_CASE("closed forms are integers for every even n") {
    using namespace formulas;
    for (unsigned n = 2; n <= 400; n += 2) {
        CHECK_NOTHROW(rank_psl2(n));
        CHECK_NOTHROW(rank_gl2(n));
        CHECK_NOTHROW(restriction_cokernel_rank(n));
        CHECK_NOTHROW(z10w_dim(n));
        CHECK_NOTHROW(pn0_dim(n));
        // Restriction cokernel = rank(SL2) - rank(GL2).
        CHECK(restriction_cokernel_rank(n) == rank_psl2(n) - rank_gl2(n));
    }
}

TEST_CASE("verification suites pass on small ranges") {
    for (const auto& c : suite_formulas({2, 14, 1, 7}, 2)) CHECK_MESSAGE(c.pass(), c.label);
    for (const auto& c : suite_identity(40, 2)) CHECK_MESSAGE(c.pass(), c.label);
    CongruenceSweep cs;
    cs.p_max = 60;
    cs.words = 500;
    for (const auto& c : suite_congruence(cs, 2)) CHECK_MESSAGE(c.pass(), c.label);
    PellSweep ps;
    ps.d_max = 15;
    for (const auto& c : suite_pell(ps, 2)) CHECK_MESSAGE(c.pass(), c.label);
    AmenableSweep as;
    as.corpus = 30;
    for (const auto& c : suite_amenable(as, 2)) CHECK_MESSAGE(c.pass(), c.label);
}

TEST_CASE("case results record failures") {
    CaseResult c{"x", {}};
    c.expect("same", 1, 1);
    CHECK(c.pass());
    c.expect("different", 1, 2);
    CHECK_FALSE(c.pass());
}
