#include "doctest.h"

#include "modcohom/pell.hpp"

#include <cmath>
#include <set>

using namespace modcohom;

namespace {

// Smallest y > 0 with D y^2 + k a perfect square, or 0 if none up to `limit`.
std::pair<long, long> first_solution(long d, long k, long limit) {
    for (long y = 1; y <= limit; ++y) {
        const long v = d * y * y + k;
        if (v < 0) continue;
        long x = static_cast<long>(std::sqrt(static_cast<double>(v)));
        while (x * x > v) --x;
        while ((x + 1) * (x + 1) <= v) ++x;
        if (x * x == v) return {x, y};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("continued fractions") {
    const CFExpansion c = cf_sqrt(13);
    CHECK(c.a0 == 3);
    CHECK(c.period == Vector{1, 1, 1, 1, 6});
    CHECK(cf_sqrt(2).period == Vector{2});
    CHECK(cf_sqrt(7).period == Vector{1, 1, 1, 4});
}

TEST_CASE("Pell solutions are minimal by brute force") {
    for (long d = 2; d <= 80; ++d) {
        if (is_square(d)) continue;
        const auto [x, y] = first_solution(d, 1, 200000);
        if (y == 0) continue;  // fundamental solution out of brute range (e.g. D = 61)
        const PellSolution p = pell_plus(d);
        CHECK_MESSAGE(p.x == x, "D = " << d);
        CHECK(p.y == y);
        const auto [mx, my] = first_solution(d, -1, 200000);
        const auto m = pell_minus(d);
        CHECK(m.has_value() == (my != 0));
        if (m) CHECK(m->y == my);
        const auto [fx, fy] = first_solution(d, 4, 200000);
        const PellSolution f = pell4(d);
        CHECK(f.x == fx);
        CHECK(f.y == fy);
    }
}

TEST_CASE("known values") {
    CHECK(pell_plus(3) == PellSolution{2, 1, 1});
    CHECK_FALSE(pell_minus(3).has_value());
    CHECK(pell_plus(61).x == Integer("1766319049"));
    CHECK(pell_plus(61).y == Integer("226153980"));
    CHECK(pell4(5).x == 3);
    CHECK(pell4(5).y == 1);
}

TEST_CASE("norm equation representatives cover every bounded solution") {
    for (long d : {2L, 3L, 5L, 7L, 13L, 21L}) {
        for (long n : {-4L, -1L, 1L, 2L, 4L, 7L, -12L, 36L}) {
            const NormEquationResult r = solve_norm_equation(d, n);
            for (const NormSolution& s : r.representatives) CHECK(s.u * s.u - d * s.y * s.y == n);
            const auto brute = brute_solve(d, n, 2000);
            std::set<NormSolution> reached;
            for (const NormSolution& s : r.representatives)
                for (long k = -12; k <= 12; ++k) reached.insert(apply_automorph(r.automorph, d, s, k));
            for (const NormSolution& s : brute) CHECK_MESSAGE(reached.count(s), "D=" << d << " N=" << n << " u=" << s.u << " y=" << s.y);
            CHECK(r.representatives.empty() == brute.empty());
        }
    }
}

TEST_CASE("filtered norm equation") {
    // u^2 - 3 y^2 = 1 with y even.
    const NormEquationResult r = solve_norm_equation(3, 1, {Congruence{0, 1, 2}});
    for (const NormSolution& s : r.representatives) {
        CHECK(s.y % 2 == 0);
        CHECK(s.u * s.u - 3 * s.y * s.y == 1);
    }
    std::set<NormSolution> reached;
    for (const NormSolution& s : r.representatives)
        for (long k = -8; k <= 8; ++k) reached.insert(apply_automorph(r.automorph, 3, s, k));
    for (const NormSolution& s : brute_solve(3, 1, 5000))
        if (s.y % 2 == 0) CHECK(reached.count(s));
}

TEST_CASE("automorph round trip and errors") {
    const PellSolution a = pell_plus(7);
    const NormSolution s{3, 1};  // 9 - 7 = 2
    CHECK(apply_automorph(a, 7, apply_automorph(a, 7, s, 5), -5) == s);
    const NormSolution t = apply_automorph(a, 7, s, 3);
    CHECK(t.u * t.u - 7 * t.y * t.y == 2);
    CHECK_THROWS(solve_norm_equation(3, 0));
    CHECK(is_square(49));
    CHECK_FALSE(is_square(50));
}
