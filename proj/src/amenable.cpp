#include "modcohom/amenable.hpp"

#include "modcohom/pell.hpp"

#include <stdexcept>

namespace modcohom {

namespace {

void require_sl2(const Mat2& a) {
    if (a.det() != 1) throw std::invalid_argument("matrix " + format_mat2(a) + " does not have determinant 1");
}

void require_hyperbolic(const Mat2& a) {
    require_sl2(a);
    if (abs(a.trace()) <= 2) throw std::invalid_argument("matrix " + format_mat2(a) + " is not hyperbolic");
    // b = 0 with det 1 forces a = d = +-1 and |tr| = 2; likewise for c.
    if (sgn(a.a12) == 0 || sgn(a.a21) == 0) throw std::logic_error("hyperbolic matrix with a zero off-diagonal entry");
}

bool divisible(const Integer& x, const Integer& m) { return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0; }

// B = (x y; z -x) with det 1 conjugating A to A^-1.
bool is_witness(const Mat2& b, const Mat2& a) {
    return sgn(b.trace()) == 0 && b.det() == 1 && b * a == a.inverse() * b;
}

}  // namespace

std::string ElementClass::to_string() const {
    switch (kind) {
        case Kind::Central: return "Central";
        case Kind::Elliptic: return "Elliptic(" + std::to_string(order) + ")";
        case Kind::Parabolic: return "Parabolic";
        case Kind::Hyperbolic: return "Hyperbolic";
    }
    return {};
}

ElementClass classify(const Mat2& a) {
    require_sl2(a);
    if (a.is_central()) return {ElementClass::Kind::Central, a.a11 == 1 ? 1 : 2};
    const Integer tr = a.trace();
    if (tr == 0) return {ElementClass::Kind::Elliptic, 4};
    if (tr == 1) return {ElementClass::Kind::Elliptic, 6};
    if (tr == -1) return {ElementClass::Kind::Elliptic, 3};
    if (abs(tr) == 2) return {ElementClass::Kind::Parabolic, 0};
    return {ElementClass::Kind::Hyperbolic, 0};
}

QForm qform(const Mat2& a) {
    require_hyperbolic(a);
    return {a.a12, a.a22 - a.a11, -a.a21};
}

// B = (x y; z -x). Comparing B A with A^-1 B entrywise, the off-diagonal
// entries agree identically and both diagonal entries reduce to
//   b z = (d - a) x - c y.
// Together with det B = -(x^2 + y z) = 1 this gives Q_A(x, y) = -b, and with
// u = 2 b x + (d - a) y it becomes u^2 - D y^2 = -4 b^2, D = tr^2 - 4.
// Integrality of x and z is the pair of congruences
//   u - (d - a) y = 0                          mod 2b
//   (d - a) u - ((d - a)^2 + 2 b c) y = 0      mod 2b^2.
// Both are linear in (u, y), so the search over solution classes is finite.
std::optional<Mat2> dinf_decision(const Mat2& a) {
    require_hyperbolic(a);
    const Integer b = a.a12, c = a.a21, delta = a.a22 - a.a11;
    const Integer d = a.trace() * a.trace() - 4;
    const Integer two_b = 2 * abs(b), two_b2 = 2 * b * b;
    const std::vector<Congruence> filters = {{1, -delta, two_b}, {delta, -(delta * delta + 2 * b * c), two_b2}};
    const NormEquationResult sol = solve_norm_equation(d, -4 * b * b, filters);
    for (const NormSolution& s : sol.representatives) {
        const Integer x = (s.u - delta * s.y) / (2 * b);
        const Integer z = (delta * x - c * s.y) / b;
        const Mat2 w{x, s.y, z, -x};
        if (!is_witness(w, a)) throw std::logic_error("dinf_decision: filtered solution does not give a witness");
        return w;
    }
    return std::nullopt;
}

std::optional<Mat2> dinf_brute_force(const Mat2& a, long bound) {
    require_hyperbolic(a);
    const Integer b = a.a12, c = a.a21, delta = a.a22 - a.a11;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            const Integer rhs = delta * x - c * y;
            if (!divisible(rhs, b)) continue;
            const Mat2 w{Integer(x), Integer(y), Integer(rhs / b), Integer(-x)};
            if (is_witness(w, a)) return w;
        }
    return std::nullopt;
}

Mat2 parabolic_generator(const Mat2& a) {
    require_sl2(a);
    if (abs(a.trace()) != 2 || a.is_central()) throw std::invalid_argument("matrix " + format_mat2(a) + " is not parabolic");
    const Mat2 m = sgn(a.trace()) > 0 ? a : -a;
    // Primitive vector v spanning the fixed line of m.
    Integer p = m.a12, q = 1 - m.a11;
    if (sgn(p) == 0 && sgn(q) == 0) {
        p = m.a22 - 1;
        q = -m.a21;
    }
    Integer g, r, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    p /= g;
    q /= g;
    // p s + q r = 1, so h = (p -r; q s) has determinant 1 and h e1 = v.
    const Mat2 h{p, -r, q, s};
    const Mat2 conj = h.inverse() * m * h;  // (1 k; 0 1)
    const Mat2 gen = h * Mat2::of(1, 1, 0, 1) * h.inverse();
    return sgn(conj.a12) > 0 ? gen : gen.inverse();
}

AmenableTypeReport max_amenable_type(const Mat2& a) {
    const ElementClass cls = classify(a);
    AmenableTypeReport r;
    r.element = cls;
    switch (cls.kind) {
        case ElementClass::Kind::Central:
            throw std::invalid_argument("max_amenable_type: central element " + format_mat2(a));
        case ElementClass::Kind::Elliptic:
            if (cls.order == 4) {
                r.psl_type = "C2";
                r.sl2_type = "C4";
                r.unique_maximal = false;
            } else {
                r.psl_type = "C3";
                r.sl2_type = "C6";
            }
            break;
        case ElementClass::Kind::Parabolic:
            r.psl_type = "Z";
            r.sl2_type = "ZxC2";
            r.generator = parabolic_generator(a);
            break;
        case ElementClass::Kind::Hyperbolic:
            r.witness = dinf_decision(a);
            r.psl_type = r.witness ? "Dinf" : "Z";
            r.sl2_type = r.witness ? "Z:C4" : "ZxC2";
            break;
    }
    return r;
}

}  // namespace modcohom
