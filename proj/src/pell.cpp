#include "modcohom/pell.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcohom {

namespace {

Integer isqrt(const Integer& x) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

void require_nonsquare(const Integer& d) {
    if (d <= 1 || is_square(d)) throw std::invalid_argument("D must be a positive non-square, got " + d.get_str());
}

// (p_k, q_k) for k = 0 .. count-1, using the periodic partial quotients.
std::vector<std::pair<Integer, Integer>> convergents(const CFExpansion& cf, std::size_t count) {
    std::vector<std::pair<Integer, Integer>> out;
    Integer p_prev = 1, q_prev = 0, p = cf.a0, q = 1;
    out.emplace_back(p, q);
    for (std::size_t k = 1; k < count; ++k) {
        const Integer& a = cf.period[(k - 1) % cf.period.size()];
        Integer pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        out.emplace_back(p, q);
    }
    return out;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

bool is_square(const Integer& x) { return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

CFExpansion cf_sqrt(const Integer& d) {
    require_nonsquare(d);
    CFExpansion cf;
    cf.a0 = isqrt(d);
    Integer m = 0, q = 1, a = cf.a0;
    do {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
    } while (a != 2 * cf.a0);
    return cf;
}

PellSolution pell_plus(const Integer& d) {
    const CFExpansion cf = cf_sqrt(d);
    const std::size_t len = cf.period.size();
    const std::size_t index = len % 2 == 0 ? len - 1 : 2 * len - 1;
    const auto [x, y] = convergents(cf, index + 1).back();
    return {x, y, 1};
}

std::optional<PellSolution> pell_minus(const Integer& d) {
    const CFExpansion cf = cf_sqrt(d);
    const std::size_t len = cf.period.size();
    if (len % 2 == 0) return std::nullopt;
    const auto [x, y] = convergents(cf, len).back();
    return PellSolution{x, y, -1};
}

PellSolution pell4(const Integer& d) {
    const PellSolution e1 = pell_plus(d);
    // The unit (t + s sqrt D)/2 of norm 1 has (t, s) both even, or its square
    // or cube lies in Z[sqrt D]; in that case it equals e1 and t is recovered
    // from t^3 - 3t = 2 x1 or t^2 = 2 x1 + 2.
    auto finish = [&](const Integer& t) -> std::optional<PellSolution> {
        const Integer s2n = t * t - 4;
        if (sgn(s2n) <= 0 || !mpz_divisible_p(s2n.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        const Integer s2 = s2n / d;
        if (!is_square(s2)) return std::nullopt;
        return PellSolution{t, isqrt(s2), 4};
    };
    const Integer target = 2 * e1.x;
    Integer t;
    mpz_root(t.get_mpz_t(), target.get_mpz_t(), 3);
    for (Integer c = t; c <= t + 2; ++c)
        if (c * c * c - 3 * c == target)
            if (auto r = finish(c)) return *r;
    const Integer sq = 2 * e1.x + 2;
    if (is_square(sq))
        if (auto r = finish(isqrt(sq))) return *r;
    return {2 * e1.x, 2 * e1.y, 4};
}

bool Congruence::holds(const Integer& u, const Integer& y) const {
    const Integer v = alpha * u + beta * y;
    if (sgn(modulus) == 0) return sgn(v) == 0;
    return mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

NormSolution apply_automorph(const PellSolution& a, const Integer& d, NormSolution s, long k) {
    const Integer z = k < 0 ? Integer(-a.y) : a.y;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) s = {a.x * s.u + d * z * s.y, z * s.u + a.x * s.y};
    return s;
}

NormEquationResult solve_norm_equation(const Integer& d, const Integer& n, const std::vector<Congruence>& filters) {
    require_nonsquare(d);
    if (sgn(n) == 0) throw std::invalid_argument("solve_norm_equation: N = 0 is degenerate");
    const PellSolution e = pell_plus(d);
    NormEquationResult out{d, n, {}, e};

    // Every class under +-(x1 + y1 sqrt D)^k has a member with
    //   0 <= y <= y1 sqrt(N / (2 (x1 + 1)))    for N > 0,
    //   0 <  y <= y1 sqrt(-N / (2 (x1 - 1)))   for N < 0.
    // The bound below rounds up.
    const Integer absn = abs(n);
    const Integer den = 2 * (e.x + (sgn(n) > 0 ? 1 : -1));
    const Integer ymax = isqrt(e.y * e.y * absn / den) + 1;

    std::vector<NormSolution> classes;
    auto same_class = [&](const NormSolution& a, const NormSolution& b) {
        // (a.u + a.y r)(b.u - b.y r) / N must lie in Z[sqrt D]
        const Integer re = a.u * b.u - d * a.y * b.y;
        const Integer im = a.y * b.u - a.u * b.y;
        return mpz_divisible_p(re.get_mpz_t(), absn.get_mpz_t()) && mpz_divisible_p(im.get_mpz_t(), absn.get_mpz_t());
    };
    for (Integer y = 0; y <= ymax; ++y) {
        const Integer u2 = n + d * y * y;
        if (!is_square(u2)) continue;
        const Integer u = isqrt(u2);
        for (const NormSolution& c : {NormSolution{u, y}, NormSolution{-u, y}}) {
            if (std::none_of(classes.begin(), classes.end(), [&](const NormSolution& o) { return same_class(c, o); }))
                classes.push_back(c);
        }
    }

    // Filters are congruences, so a power of the automorph that is the
    // identity modulo every modulus preserves them.
    Integer l = 1;
    for (const Congruence& f : filters)
        if (sgn(f.modulus) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.modulus.get_mpz_t());
    long order = 1;
    if (l > 1) {
        NormSolution c1{1, 0}, c2{0, 1};  // columns of the automorph power mod l
        for (;; ++order) {
            c1 = apply_automorph(e, d, c1, 1);
            c2 = apply_automorph(e, d, c2, 1);
            c1 = {mod(c1.u, l), mod(c1.y, l)};
            c2 = {mod(c2.u, l), mod(c2.y, l)};
            if (c1 == NormSolution{1, 0} && c2 == NormSolution{0, 1}) break;
            if (order > 10'000'000) throw std::runtime_error("solve_norm_equation: automorph order modulo filters too large");
        }
    }
    for (const NormSolution& c : classes) {
        NormSolution v = c;
        for (long i = 0; i < order; ++i, v = apply_automorph(e, d, v, 1)) {
            if (!std::all_of(filters.begin(), filters.end(), [&](const Congruence& f) { return f.holds(v.u, v.y); })) continue;
            out.representatives.push_back(v);
            out.representatives.push_back({-v.u, -v.y});
        }
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    out.representatives.erase(std::unique(out.representatives.begin(), out.representatives.end()), out.representatives.end());
    if (order > 1) {
        NormSolution a = apply_automorph(e, d, {1, 0}, order);
        out.automorph = {a.u, a.y, 1};
    }
    return out;
}

std::vector<NormSolution> brute_solve(const Integer& d, const Integer& n, const Integer& bound) {
    if (bound < 1) throw std::invalid_argument("brute_solve: bound must be >= 1");
    std::vector<NormSolution> out;
    for (Integer y = 0; y <= bound; ++y) {
        const Integer u2 = n + d * y * y;
        if (!is_square(u2)) continue;
        const Integer u = isqrt(u2);
        if (u > bound) continue;
        for (const Integer& su : {u, Integer(-u)})
            for (const Integer& sy : {y, Integer(-y)}) out.push_back({su, sy});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace modcohom
