#include "doctest.h"
#include "support.hpp"

#include "modcohom/congruence.hpp"

#include <set>

using namespace modcohom;

namespace {

bool has_root(long p, long a, long b, long c) {
    for (long x = 0; x < p; ++x)
        if ((a * x * x + b * x + c) % p == 0) return true;
    return false;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
    std::vector<std::size_t> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
    return out;
}

}  // namespace

TEST_CASE("membership predicates") {
    CHECK(gamma0_member(Mat2::of(1, 5, 11, 56), 11));
    CHECK_FALSE(gamma0_member(Mat2::of(1, 0, 1, 1), 11));
    CHECK(gamma1_member(Mat2::of(1, 1, 0, 1), 5));
    CHECK(gamma1_member(Mat2::of(6, 1, 5, 1), 5));
    CHECK_FALSE(gamma1_member(Mat2::of(2, 1, 5, 3), 5));
    CHECK(gamma1_member(Mat2::of(-1, 0, 0, -1), 2));
}

TEST_CASE("b_N values") {
    const BNValue v = bN(Mat2::of(6, 1, 5, 1), 5);
    CHECK(v.first == 1);
    CHECK(v.second == 1);
    CHECK(v.integral);
    CHECK_FALSE(bN(Mat2::of(2, 1, 5, 3), 5).integral);
}

TEST_CASE("primality and Legendre symbols") {
    std::vector<long> primes;
    for (long p = 2; p < 60; ++p)
        if (is_prime(p)) primes.push_back(p);
    CHECK(primes == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
    for (long p : {5L, 7L, 11L, 13L})
        for (long a = 1; a < p; ++a) CHECK((legendre(a, p) == 1) == has_root(p, 1, 0, -a));
}

TEST_CASE("torsion criterion against a brute-force root search") {
    // Order-4 elements of SL2 in Gamma_0(p) exist iff x^2 + 1 has a root mod p;
    // order-6 ones iff x^2 - x + 1 does.
    for (long p = 5; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        const bool torsion_free = !has_root(p, 1, 0, 1) && !has_root(p, 1, -1, 1);
        CHECK_MESSAGE(torsion_criterion(p) == torsion_free, "p = " << p);
        CHECK(torsion_criterion(p) == (p % 12 == 11));
        const auto t = find_torsion(p);
        CHECK(t.has_value() == !torsion_free);
        if (t) {
            CHECK(gamma0_member(t->element, p));
            CHECK(power(t->element, t->order).is_central());
        }
    }
}

TEST_CASE("coset table is a valid action of PSL2Z") {
    for (long p : {5L, 11L, 23L}) {
        const CosetTable t = coset_table(p);
        REQUIRE(t.size() == std::size_t(p) + 1);
        const auto& s = t.action[0];
        const auto& tt = t.action[1];
        CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == t.size());
        CHECK(std::set<std::size_t>(tt.begin(), tt.end()).size() == t.size());
        std::vector<std::size_t> id(t.size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        CHECK(compose(s, s) == id);
        CHECK(compose(compose(tt, tt), tt) == id);
        // Transversal words reach every coset from the base point.
        for (std::size_t x = 0; x < t.size(); ++x) CHECK(t.act(t.base, t.transversal[x]) == x);
    }
    CHECK_THROWS(coset_table(12));
}

TEST_CASE("Schreier bases lie in Gamma_0(p) and have the expected size") {
    for (long p : {11L, 23L, 47L, 59L, 71L}) {
        const FreeBasis b = schreier_free_basis(p);
        CHECK(b.words.size() == std::size_t(1 + (p + 1) / 6));
        for (const Mat2& m : b.matrices) {
            CHECK(gamma0_member(m, p));
            CHECK(abs(m.trace()) >= 2);
        }
    }
    CHECK_THROWS(schreier_free_basis(13));
}

TEST_CASE("short products in the p = 11 basis are never torsion or trivial") {
    const FreeBasis b = schreier_free_basis(11);
    std::vector<Mat2> letters = b.matrices;
    for (const Mat2& m : b.matrices) letters.push_back(m.inverse());
    const std::size_t k = b.matrices.size();
    // Reduced words of length 1..5, enumerated directly.
    std::vector<std::pair<Mat2, std::size_t>> frontier = {{Mat2::identity(), 2 * k}};
    for (int len = 1; len <= 5; ++len) {
        std::vector<std::pair<Mat2, std::size_t>> next;
        for (const auto& [m, last] : frontier)
            for (std::size_t l = 0; l < 2 * k; ++l) {
                if (last < 2 * k && (l + k) % (2 * k) == last) continue;
                const Mat2 g = m * letters[l];
                CHECK_FALSE(g.is_central());
                CHECK(abs(g.trace()) >= 2);
                next.push_back({g, l});
            }
        frontier = std::move(next);
    }
}

TEST_CASE("lifted subgroup and its overgroups") {
    const LiftedSubgroup k = lift_to_sl2(schreier_free_basis(11));
    CHECK(k.presentation.generator_count() == 3);
    CHECK(k.presentation.relators.empty());
    REQUIRE(k.overgroups.size() == 2);
    for (const OvergroupSpec& o : k.overgroups) {
        CHECK(relators_hold(o.presentation, o.matrices));
        for (std::size_t i = 0; i < k.words.size(); ++i)
            CHECK(evaluate_word(o.words[i], o.matrices) == k.matrices.images[i]);
    }
    const GroupData sl = builtin("SL2Z");
    for (std::size_t i = 0; i < k.words.size(); ++i) CHECK(evaluate_word(k.words[i], sl.matrices) == k.matrices.images[i]);
}

TEST_CASE("json export") {
    const auto t = to_json(coset_table(11));
    CHECK(t.at("p") == 11);
    const auto b = to_json(schreier_free_basis(11));
    CHECK(b.at("rank") == 3);
    CHECK(b.at("generators").size() == 3);
}
