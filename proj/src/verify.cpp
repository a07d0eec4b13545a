#include "modcohom/verify.hpp"

#include "modcohom/amenable.hpp"
#include "modcohom/congruence.hpp"
#include "modcohom/constructions.hpp"
#include "modcohom/formulas.hpp"
#include "modcohom/parallel.hpp"
#include "modcohom/pell.hpp"
#include "modcohom/poly_rep.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace modcohom {

using nlohmann::json;

bool CaseResult::pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

void CaseResult::expect(std::string name, json expected, json actual) {
    const bool ok = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

void CaseResult::require(std::string name, bool ok, json expected, json actual) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

namespace {

IntMatrix shifted(const IntMatrix& m, long k) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += k;
    return r;
}

long nullity(const IntMatrix& m) { return static_cast<long>(m.cols() - rational_rank(m)); }

// Closed forms throw when they do not produce an integer; the failure is
// reported as a string so that it shows up as a mismatch.
json formula_value(const std::function<long()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

long two_adic_order(const AbelianInvariants& a) {
    long total = 0;
    for (const Integer& d : a.torsion) total += static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
    return total;
}

AbelianInvariants h1_of(const char* group, unsigned n) {
    const GroupData g = builtin(group);
    return Cohomology(g.presentation, Representation::polynomial(g.matrices, n)).h1().invariants;
}

CaseResult formulas_even(unsigned n) {
    using namespace formulas;
    CaseResult c{"n=" + std::to_string(n), {}};
    const AbelianInvariants psl = h1_of("PSL2Z", n);
    const AbelianInvariants sl = h1_of("SL2Z", n);
    const GroupData gl = builtin("GL2Z");
    const Cohomology glc(gl.presentation, Representation::polynomial(gl.matrices, n));
    const AbelianInvariants& glh = glc.h1().invariants;

    c.expect("psl2_rank", formula_value([&] { return rank_psl2(n); }), psl.free_rank);
    c.expect("sl2_equals_psl2", psl.to_string(), sl.to_string());
    c.expect("gl2_rank", formula_value([&] { return rank_gl2(n); }), glh.free_rank);
    c.expect("gl2_rank_w_invariant_route", static_cast<long>(glh.free_rank), w_invariant_h1_rank(n));

    const IntMatrix S = rho_matrix(gens::s(), n), T = rho_matrix(gens::t(), n), W = rho_matrix(gens::w(), n);
    c.expect("m0_kernel", formula_value([&] { return m0(n); }), nullity(shifted(S, 1)));
    c.expect("n0_kernel", formula_value([&] { return n0(n); }), nullity(shifted(T, -1)));
    c.expect("psl2_rank_m0_minus_n0", nullity(shifted(S, 1)) - nullity(shifted(T, -1)), psl.free_rank);
    c.expect("pn0_kernel", formula_value([&] { return pn0_dim(n); }), nullity(vstack(shifted(T, -1), shifted(W, -1))));
    c.expect("z10w_kernel", formula_value([&] { return z10w_dim(n); }), static_cast<long>(normalized_w_cocycle_dim(n)));

    const long m = beps_count(n);
    const long order2 = two_adic_order(glh);
    c.require("gl2_2torsion_at_least_2^m", order2 >= m, ">= " + std::to_string(m), order2);

    std::set<ClassCoordinates> seen;
    bool all_cocycles = true;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<bool> eps(static_cast<std::size_t>(m));
        for (long k = 0; k < m; ++k) eps[static_cast<std::size_t>(k)] = (mask >> k) & 1UL;
        const Cocycle b = make_beps(n, eps);
        all_cocycles = all_cocycles && glc.is_cocycle(b);
        seen.insert(glc.class_coordinates(b));
    }
    c.require("beps_are_cocycles", all_cocycles, true, all_cocycles);
    c.expect("beps_distinct_classes", 1L << m, static_cast<long>(seen.size()));
    return c;
}

CaseResult formulas_odd(unsigned n) {
    CaseResult c{"n=" + std::to_string(n), {}};
    const AbelianInvariants sl = h1_of("SL2Z", n);
    c.expect("sl2_free_rank", 0, sl.free_rank);
    bool all_two = true;
    for (const Integer& d : sl.torsion) all_two = all_two && d == 2;
    c.require("sl2_torsion_all_2", all_two, true, sl.to_string());
    c.require("sl2_torsion_count_le_n+1", sl.torsion.size() <= n + 1, "<= " + std::to_string(n + 1), sl.torsion.size());
    if (n == 1) c.require("sl2_n1_trivial", sl.is_trivial(), "0", sl.to_string());
    return c;
}

}  // namespace

std::vector<CaseResult> suite_formulas(const FormulaSweep& r, unsigned jobs) {
    std::vector<unsigned> ns;
    for (unsigned n = r.even_lo + r.even_lo % 2; n <= r.even_hi; n += 2) ns.push_back(n);
    for (unsigned n = r.odd_lo | 1U; n <= r.odd_hi; n += 2) ns.push_back(n);
    return parallel_map(ns.size(), jobs, [&](std::size_t i) { return ns[i] % 2 == 0 ? formulas_even(ns[i]) : formulas_odd(ns[i]); });
}

std::vector<CaseResult> suite_identity(unsigned n_max, unsigned jobs) {
    std::vector<unsigned> ns;
    for (unsigned n = 0; n <= n_max; n += 2) ns.push_back(n);
    return parallel_map(ns.size(), jobs, [&](std::size_t i) {
        const unsigned n = ns[i];
        CaseResult c{"n=" + std::to_string(n), {}};
        const int e = eta(n);
        if (n > 0) c.expect("trace_t", e, rep_trace(gens::t(), n).get_si());
        c.expect("alt_diagonal_sum", e, alt_diagonal_sum(n).get_si());
        return c;
    });
}

namespace {

bool is_torsion_lift(const Mat2& m) { return abs(m.trace()) <= 1 || m.is_central(); }

// Reduced words of length <= max_len in the basis and inverses; none may
// evaluate to a torsion element.
bool no_short_torsion(const FreeBasis& basis, std::size_t max_len) {
    const std::size_t k = basis.matrices.size();
    std::vector<Mat2> letters;
    for (const Mat2& m : basis.matrices) letters.push_back(m);
    for (const Mat2& m : basis.matrices) letters.push_back(m.inverse());
    std::function<bool(const Mat2&, std::size_t, std::size_t)> walk = [&](const Mat2& acc, std::size_t last, std::size_t len) {
        if (len > 0 && is_torsion_lift(acc)) return false;
        if (len == max_len) return true;
        for (std::size_t l = 0; l < 2 * k; ++l) {
            if (len > 0 && (l + k) % (2 * k) == last) continue;  // would cancel
            if (!walk(acc * letters[l], l, len + 1)) return false;
        }
        return true;
    };
    return walk(Mat2::identity(), 0, 0);
}

CaseResult congruence_prime(long p) {
    CaseResult c{"p=" + std::to_string(p), {}};
    const CosetTable table = coset_table(p);
    c.expect("coset_count", p + 1, table.size());
    if (p <= 3) return c;
    const bool criterion = torsion_criterion(p);
    c.expect("criterion_iff_11_mod_12", p % 12 == 11, criterion);
    const auto torsion = find_torsion(p);
    if (!criterion) {
        bool ok = false;
        json actual = "none";
        if (torsion) {
            const Mat2& g = torsion->element;
            const Mat2 pw = power(g, torsion->order);
            ok = gamma0_member(g, p) && !g.is_central() && pw.is_central();
            actual = format_mat2(g) + " order " + std::to_string(torsion->order);
        }
        c.require("torsion_witness", ok, "element of order 2 or 3 in Gamma_0", actual);
    } else {
        c.require("no_torsion_witness", !torsion, "none", torsion ? format_mat2(torsion->element) : "none");
        const FreeBasis basis = schreier_free_basis(p);
        c.expect("free_basis_size", 1 + (p + 1) / 6, basis.words.size());
        bool members = true;
        for (const Mat2& m : basis.matrices) members = members && gamma0_member(m, p);
        c.require("basis_in_gamma0", members, true, members);
        if (basis.words.size() <= 5) {
            const bool ok = no_short_torsion(basis, 4);
            c.require("no_torsion_in_short_products", ok, true, ok);
        }
    }
    return c;
}

CaseResult bn_level(long level, const CongruenceSweep& s) {
    CaseResult c{"N=" + std::to_string(level), {}};
    std::mt19937_64 rng(s.seed ^ static_cast<std::uint64_t>(level) * 0x9E3779B97F4A7C15ULL);
    std::uniform_int_distribution<std::size_t> len(1, s.max_word_length);
    std::uniform_int_distribution<int> letter(0, 3);
    const Mat2 alphabet[] = {gens::s(), gens::s().inverse(), gens::t(), gens::t().inverse()};
    std::size_t mismatches = 0, members = 0;
    for (std::size_t i = 0; i < s.words; ++i) {
        Mat2 g;
        for (std::size_t j = len(rng); j > 0; --j) g = g * alphabet[letter(rng)];
        const bool in_gamma1 = gamma1_member(g, level);
        members += in_gamma1;
        if (bN(g, level).integral != in_gamma1) ++mismatches;
    }
    c.expect("bN_integral_iff_gamma1", 0, mismatches);
    c.require("sample_hits_gamma1", members > 0, "> 0", members);
    return c;
}

}  // namespace

std::vector<CaseResult> suite_congruence(const CongruenceSweep& s, unsigned jobs) {
    std::vector<long> primes;
    for (long p = 2; p <= s.p_max; ++p)
        if (is_prime(p)) primes.push_back(p);
    const std::size_t np = primes.size();
    return parallel_map(np + s.levels.size(), jobs,
                        [&](std::size_t i) { return i < np ? congruence_prime(primes[i]) : bn_level(s.levels[i - np], s); });
}

namespace {

// All (u, y) with |u|, |y| <= bound and u^2 - D y^2 = N, for every
// 0 < |N| <= nmax at once, in machine integers.
std::map<long, std::set<std::pair<long, long>>> brute_norms(long d, long nmax, long bound) {
    std::map<long, std::set<std::pair<long, long>>> out;
    for (long y = 0; y <= bound; ++y) {
        const long dy2 = d * y * y;
        long u = static_cast<long>(std::sqrt(static_cast<double>(std::max(0L, dy2 - nmax))));
        while (u > 0 && u * u > dy2 - nmax) --u;
        for (; u <= bound && u * u <= dy2 + nmax; ++u) {
            const long nn = u * u - dy2;
            if (nn == 0 || std::abs(nn) > nmax) continue;
            for (long su : {u, -u})
                for (long sy : {y, -y}) out[nn].insert({su, sy});
        }
    }
    return out;
}

CaseResult pell_case(long d, const PellSweep& s, long nmax) {
    CaseResult c{"D=" + std::to_string(d), {}};
    const CFExpansion cf = cf_sqrt(d);
    const std::size_t len = cf.period.size();
    bool shape = cf.period.back() == 2 * cf.a0;
    for (std::size_t i = 0; i + 1 < len; ++i) shape = shape && cf.period[i] == cf.period[len - 2 - i];
    c.require("cf_period_shape", shape, "palindrome ending in 2 a0", len);

    const PellSolution plus = pell_plus(d);
    c.require("pell_plus_norm", plus.x * plus.x - d * plus.y * plus.y == 1, 1, true);
    long first_plus = 0, first_minus = 0;
    for (long y = 1; y <= plus.y.get_si(); ++y) {
        const Integer p2 = Integer(d) * y * y + 1, m2 = Integer(d) * y * y - 1;
        if (!first_minus && is_square(m2)) first_minus = y;
        if (!first_plus && is_square(p2)) first_plus = y;
        if (first_plus) break;
    }
    c.expect("pell_plus_minimal_y", first_plus, plus.y.get_si());
    const auto minus = pell_minus(d);
    c.expect("pell_minus_iff_odd_period", len % 2 == 1, minus.has_value());
    c.expect("pell_minus_brute", first_minus, minus ? minus->y.get_si() : 0L);

    const PellSolution four = pell4(d);
    c.require("pell4_norm", four.x * four.x - d * four.y * four.y == 4 && sgn(four.y) > 0, 4, true);
    long first_four = 0;
    for (long y = 1; y <= four.y.get_si() && !first_four; ++y)
        if (is_square(Integer(d) * y * y + 4)) first_four = y;
    c.expect("pell4_minimal_s", first_four, four.y.get_si());

    const auto brute = brute_norms(d, nmax, s.brute_bound);
    std::vector<long> incomplete, invalid;
    long max_steps = 0;
    for (long n = -nmax; n <= nmax; ++n) {
        if (n == 0) continue;
        const NormEquationResult r = solve_norm_equation(d, n);
        std::set<std::pair<long, long>> reached;
        bool ok = true;
        for (const NormSolution& rep : r.representatives) {
            ok = ok && rep.u * rep.u - d * rep.y * rep.y == n;
            const NormSolution image = apply_automorph(r.automorph, d, rep, 1);
            ok = ok && image.u * image.u - d * image.y * image.y == n;
            for (int dir : {1, -1}) {
                NormSolution v = rep;
                for (long step = 0; step < 64; ++step) {
                    if (abs(v.u) <= s.brute_bound && abs(v.y) <= s.brute_bound) {
                        if (reached.insert({v.u.get_si(), v.y.get_si()}).second) max_steps = std::max(max_steps, step);
                    } else if (step > 0) {
                        break;
                    }
                    v = apply_automorph(r.automorph, d, v, dir);
                }
            }
        }
        if (!ok) invalid.push_back(n);
        auto it = brute.find(n);
        if (it != brute.end())
            for (const auto& sol : it->second)
                if (!reached.count(sol)) {
                    incomplete.push_back(n);
                    break;
                }
    }
    c.expect("norm_solutions_valid", json::array(), invalid);
    c.expect("orbit_completeness", json::array(), incomplete);
    c.info["max_automorph_steps"] = max_steps;
    return c;
}

}  // namespace

std::vector<CaseResult> suite_pell(const PellSweep& s, unsigned jobs) {
    std::vector<long> ds;
    for (long d = 2; d <= s.d_max; ++d)
        if (!is_square(d)) ds.push_back(d);
    return parallel_map(ds.size(), jobs, [&](std::size_t i) { return pell_case(ds[i], s, s.n_abs_max); });
}

namespace {

CaseResult amenable_fixed() {
    CaseResult c{"examples", {}};
    auto type = [](const char* m) { return max_amenable_type(parse_mat2(m)); };
    c.expect("3,1;2,1", "ZxC2", type("3,1;2,1").sl2_type);
    const auto sym = type("2,1;1,1");
    c.expect("2,1;1,1", "Z:C4", sym.sl2_type);
    const Mat2 a = parse_mat2("2,1;1,1");
    const bool s_works = gens::s() * a == a.inverse() * gens::s();
    c.require("s_conjugates_2,1;1,1_to_inverse", s_works, true, s_works);
    const auto par = type("1,3;0,1");
    c.expect("1,3;0,1", "1,1;0,1", par.generator ? format_mat2(*par.generator) : "none");
    const auto low = type("1,0;4,1");
    c.expect("1,0;4,1", "1,0;1,1", low.generator ? format_mat2(*low.generator) : "none");
    c.expect("t", "C6", type("0,-1;1,1").sl2_type);
    c.expect("s", "C4", type("0,-1;1,0").sl2_type);
    const QForm q = qform(parse_mat2("3,1;2,1"));
    c.expect("qform_3,1;2,1", json::array({"1", "-2", "-2", "12"}),
             json::array({q.a.get_str(), q.b.get_str(), q.c.get_str(), q.discriminant().get_str()}));
    return c;
}

// Hyperbolic matrices from random words in s, t, plus conjugates of
// symmetric matrices, deduplicated, in generation order.
std::vector<Mat2> hyperbolic_corpus(const AmenableSweep& s) {
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<int> letter(0, 3), len(2, 14);
    const Mat2 alphabet[] = {gens::s(), gens::s().inverse(), gens::t(), gens::t().inverse()};
    std::vector<Mat2> out;
    std::set<std::string> seen;
    for (std::size_t attempt = 0; out.size() < s.corpus && attempt < 1000000; ++attempt) {
        Mat2 g;
        for (int j = len(rng); j > 0; --j) g = g * alphabet[letter(rng)];
        if (attempt % 4 == 0) {
            // symmetric hyperbolic h = k^T k
            const Mat2 k = g;
            g = Mat2{k.a11, k.a21, k.a12, k.a22} * k;
        }
        const Integer tr = abs(g.trace());
        if (tr <= 2 || tr > s.trace_max) continue;
        if (seen.insert(format_mat2(g)).second) out.push_back(g);
    }
    return out;
}

CaseResult amenable_case(const Mat2& a, const AmenableSweep& s, std::uint64_t seed) {
    CaseResult c{"A=" + format_mat2(a), {}};
    const auto decided = dinf_decision(a);
    const auto brute = dinf_brute_force(a, s.brute_bound);
    if (decided) {
        const Mat2& b = *decided;
        const bool valid = sgn(b.trace()) == 0 && b.det() == 1 && b * a == a.inverse() * b;
        c.require("witness_valid", valid, true, format_mat2(b));
    }
    c.require("agrees_with_brute_force", decided.has_value() || !brute.has_value(), brute ? "witness" : "any",
              decided ? "witness" : "none");
    if (a.a12 == a.a21) c.require("symmetric_has_witness", decided.has_value(), true, decided.has_value());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, 3), len(1, 6);
    const Mat2 alphabet[] = {gens::s(), gens::s().inverse(), gens::t(), gens::t().inverse()};
    Mat2 g;
    for (int j = len(rng); j > 0; --j) g = g * alphabet[letter(rng)];
    const auto conj = dinf_decision(g * a * g.inverse());
    c.expect("conjugation_covariant", decided.has_value(), conj.has_value());
    return c;
}

}  // namespace

std::vector<CaseResult> suite_amenable(const AmenableSweep& s, unsigned jobs) {
    const std::vector<Mat2> corpus = hyperbolic_corpus(s);
    std::vector<CaseResult> out = parallel_map(corpus.size() + 1, jobs, [&](std::size_t i) {
        return i == 0 ? amenable_fixed() : amenable_case(corpus[i - 1], s, s.seed + i);
    });
    CaseResult size{"corpus", {}};
    size.expect("corpus_size", s.corpus, corpus.size());
    out.push_back(size);
    return out;
}

}  // namespace modcohom
