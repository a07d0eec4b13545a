#include "modcohom/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace modcohom {

using nlohmann::json;

namespace {

bool congruent(const Integer& a, const Integer& b, const Integer& n) {
    const Integer diff = a - b;
    return mpz_divisible_p(diff.get_mpz_t(), n.get_mpz_t()) != 0;
}

void require_positive(const Integer& n) {
    if (sgn(n) <= 0) throw std::invalid_argument("level must be positive");
}

long mod(long a, long p) { return ((a % p) + p) % p; }

long inverse_mod(long a, long p) {
    Integer r;
    const Integer x = mod(a, p), m = p;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) throw std::domain_error("not invertible mod p");
    return r.get_si();
}

enum : std::size_t { kS = 0, kT = 1 };

}  // namespace

bool gamma0_member(const Mat2& g, const Integer& n) {
    require_positive(n);
    return congruent(g.a21, 0, n);
}

bool gamma1_member(const Mat2& g, const Integer& n) {
    require_positive(n);
    return congruent(g.a21, 0, n) && congruent(g.a11, 1, n) && congruent(g.a22, 1, n);
}

BNValue bN(const Mat2& g, const Integer& n) {
    require_positive(n);
    BNValue v;
    v.first = mpq_class(g.a11 - 1, n);
    v.second = mpq_class(g.a21, n);
    v.first.canonicalize();
    v.second.canonicalize();
    v.integral = v.first.get_den() == 1 && v.second.get_den() == 1;
    return v;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int legendre(const Integer& a, long p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    const Integer m = p;
    Integer base, r;
    mpz_fdiv_r(base.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(base) == 0) return 0;
    const Integer e = (p - 1) / 2;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r == 1 ? 1 : -1;
}

std::size_t CosetTable::act(std::size_t x, const Word& w) const {
    for (const Letter& l : w.letters) {
        if (l.sign > 0) {
            x = action.at(l.gen)[x];
        } else {
            const auto& perm = action.at(l.gen);
            x = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), x) - perm.begin());
        }
    }
    return x;
}

CosetTable coset_table(long p) {
    if (!is_prime(p)) throw std::invalid_argument("coset_table: " + std::to_string(p) + " is not prime");
    CosetTable t;
    t.p = p;
    t.base = static_cast<std::size_t>(p);
    const std::size_t npts = static_cast<std::size_t>(p) + 1;

    auto point = [&](long x, long y) -> std::size_t {
        x = mod(x, p);
        y = mod(y, p);
        if (y == 0) return t.base;
        return static_cast<std::size_t>(mod(x * inverse_mod(y, p), p));
    };
    auto coords = [&](std::size_t i) -> std::pair<long, long> {
        return i == t.base ? std::pair<long, long>{1, 0} : std::pair<long, long>{static_cast<long>(i), 1};
    };
    // x.g = g^-1 x on column vectors
    for (const Mat2& g : {gens::s(), gens::t()}) {
        const Mat2 inv = g.inverse();
        std::vector<std::size_t> perm(npts);
        for (std::size_t i = 0; i < npts; ++i) {
            auto [x, y] = coords(i);
            perm[i] = point(inv.a11.get_si() * x + inv.a12.get_si() * y, inv.a21.get_si() * x + inv.a22.get_si() * y);
        }
        t.action.push_back(std::move(perm));
    }

    // Breadth-first transversal over the letters S, T, T^-1 in that order.
    t.transversal.assign(npts, Word{});
    std::vector<bool> seen(npts, false);
    seen[t.base] = true;
    std::deque<std::size_t> queue{t.base};
    const Letter letters[] = {{kS, 1}, {kT, 1}, {kT, -1}};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const Letter& l : letters) {
            const std::size_t y = t.act(x, Word{l});
            if (seen[y]) continue;
            seen[y] = true;
            t.transversal[y] = t.transversal[x] * Word{l};
            queue.push_back(y);
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::logic_error("coset_table: action is not transitive");
    return t;
}

bool torsion_criterion(long p) {
    if (p <= 3) throw std::invalid_argument("torsion_criterion: need a prime p > 3");
    return legendre(-1, p) == -1 && legendre(-3, p) == -1;
}

std::optional<TorsionElement> find_torsion(long p) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("find_torsion: need a prime p > 3");
    // With g = (1 0; r 1) the lower-left entry of g s g^-1 is 1 + r^2 and that
    // of g t g^-1 is 1 - r + r^2.
    auto conj = [](long r, const Mat2& x) {
        const Mat2 g = Mat2::of(1, 0, r, 1);
        return g * x * g.inverse();
    };
    for (long r = 0; r < p; ++r)
        if (mod(r * r + 1, p) == 0) return TorsionElement{conj(r, gens::s()), 2};
    for (long r = 0; r < p; ++r)
        if (mod(r * r - r + 1, p) == 0) return TorsionElement{conj(r, gens::t()), 3};
    return std::nullopt;
}

FreeBasis schreier_free_basis(long p) {
    if (p <= 3 || !is_prime(p) || !torsion_criterion(p))
        throw std::invalid_argument("schreier_free_basis: need a prime p > 3 with no torsion in Gamma_0(p), got " + std::to_string(p));
    const CosetTable table = coset_table(p);
    const std::size_t npts = table.size();
    // Schreier symbol (x, g) stands for u_x g u_{x.g}^-1; symbol id is 2x + g.
    auto id = [](std::size_t x, std::size_t g) { return 2 * x + g; };
    std::vector<bool> tree(2 * npts, false);
    for (std::size_t y = 0; y < npts; ++y) {
        if (y == table.base) continue;
        const Word& u = table.transversal[y];
        const Letter last = u.letters.back();
        const std::size_t parent = table.act(table.base, Word(std::vector<Letter>(u.letters.begin(), u.letters.end() - 1)));
        if (last.sign > 0) tree[id(parent, last.gen)] = true;
        else tree[id(y, last.gen)] = true;  // y.T = parent
    }

    // Relators S^2 and T^3 give one relation per orbit; each relation
    // eliminates its last non-tree symbol.
    std::vector<bool> eliminated(2 * npts, false);
    for (std::size_t g : {kS, kT}) {
        const std::size_t len = g == kS ? 2 : 3;
        std::vector<bool> visited(npts, false);
        for (std::size_t x = 0; x < npts; ++x) {
            if (visited[x]) continue;
            std::vector<std::size_t> orbit;
            for (std::size_t y = x; !visited[y]; y = table.action[g][y]) {
                visited[y] = true;
                orbit.push_back(y);
            }
            if (orbit.size() != len) throw std::logic_error("schreier_free_basis: point with nontrivial finite stabilizer");
            std::optional<std::size_t> victim;
            for (std::size_t y : orbit)
                if (!tree[id(y, g)] && (!victim || id(y, g) > *victim)) victim = id(y, g);
            if (!victim) throw std::logic_error("schreier_free_basis: orbit relation inside the spanning tree");
            eliminated[*victim] = true;
        }
    }

    FreeBasis basis;
    basis.p = p;
    const MatrixAssignment lifts{{gens::s(), gens::t()}, false};
    for (std::size_t x = 0; x < npts; ++x)
        for (std::size_t g : {kS, kT}) {
            if (tree[id(x, g)] || eliminated[id(x, g)]) continue;
            const std::size_t y = table.action[g][x];
            Word w = (table.transversal[x] * Word{Letter{g, 1}} * table.transversal[y].inverse()).freely_reduced();
            const Mat2 m = evaluate_word(w, lifts);
            if (!gamma0_member(m, p)) throw std::logic_error("schreier_free_basis: generator outside Gamma_0(p)");
            basis.words.push_back(std::move(w));
            basis.matrices.push_back(m);
        }
    const std::size_t expected = 1 + static_cast<std::size_t>(p + 1) / 6;
    if (basis.words.size() != expected)
        throw std::logic_error("schreier_free_basis: got " + std::to_string(basis.words.size()) + " generators, expected " +
                               std::to_string(expected));
    return basis;
}

Overgroup OvergroupSpec::with_rep(unsigned n) const {
    return {name, presentation, Representation::polynomial(matrices, n), words};
}

LiftedSubgroup lift_to_sl2(const FreeBasis& basis) {
    const GroupData sl2 = builtin("SL2Z");
    LiftedSubgroup k;
    k.presentation.name = "Gamma0bar(" + std::to_string(basis.p) + ")~";
    for (std::size_t i = 0; i < basis.words.size(); ++i) {
        k.presentation.generators.push_back("k" + std::to_string(i + 1));
        k.words.push_back(basis.words[i]);  // S, T and s, t share indices
        k.matrices.images.push_back(evaluate_word(basis.words[i], sl2.matrices));
    }

    OvergroupSpec with_eps;
    with_eps.name = "K x <eps>";
    with_eps.presentation.name = "K x <eps>";
    with_eps.presentation.generators = k.presentation.generators;
    with_eps.presentation.generators.push_back("e");
    const std::size_t e = k.words.size();
    with_eps.presentation.relators.push_back(Word{{e, 1}, {e, 1}});
    for (std::size_t i = 0; i < e; ++i) {
        with_eps.presentation.relators.push_back(Word{{e, 1}, {i, 1}, {e, -1}, {i, -1}});
        with_eps.words.push_back(Word{{i, 1}});
    }
    with_eps.matrices = k.matrices;
    with_eps.matrices.images.push_back(gens::epsilon());

    OvergroupSpec whole{"SL2Z", sl2.presentation, sl2.matrices, k.words};
    k.overgroups = {with_eps, whole};
    return k;
}

json to_json(const CosetTable& t) {
    json points = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) points.push_back(i == t.base ? std::string("inf") : std::to_string(i));
    const GroupData psl = builtin("PSL2Z");
    json transversal = json::array();
    for (const Word& w : t.transversal) transversal.push_back(format_word(w, psl.presentation));
    return {{"p", t.p},           {"points", points}, {"base", "inf"}, {"S", t.action[kS]},
            {"T", t.action[kT]}, {"transversal", transversal}};
}

json to_json(const FreeBasis& b) {
    const GroupData psl = builtin("PSL2Z");
    json gens = json::array();
    for (std::size_t i = 0; i < b.words.size(); ++i)
        gens.push_back({{"word", format_word(b.words[i], psl.presentation)}, {"matrix", format_mat2(b.matrices[i])}});
    return {{"p", b.p}, {"rank", b.words.size()}, {"generators", gens}};
}

}  // namespace modcohom
