#pragma once

#include "modcohom/mat2.hpp"

#include <optional>
#include <string>

namespace modcohom {

struct ElementClass {
    enum class Kind { Central, Elliptic, Parabolic, Hyperbolic };
    Kind kind = Kind::Central;
    int order = 0;  // order in SL2Z for elliptic elements: 3, 4 or 6

    std::string to_string() const;
    friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

ElementClass classify(const Mat2& a);

// A x^2 + B x y + C y^2
struct QForm {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    Integer operator()(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }
    friend bool operator==(const QForm&, const QForm&) = default;
};

// Q_A(x, y) = b x^2 + (d - a) x y - c y^2 for hyperbolic A = (a b; c d).
QForm qform(const Mat2& a);

// Involution B = (x y; z -x) of determinant 1 with B A B^-1 = A^-1, if any.
std::optional<Mat2> dinf_decision(const Mat2& a);

// Same question answered by scanning |x|, |y| <= bound.
std::optional<Mat2> dinf_brute_force(const Mat2& a, long bound);

// Generator g of the maximal parabolic subgroup of PSL2Z containing A;
// A = +-g^k with k > 0.
Mat2 parabolic_generator(const Mat2& a);

struct AmenableTypeReport {
    ElementClass element;
    std::string psl_type;  // C2, C3, Z, Dinf
    std::string sl2_type;  // C4, C6, ZxC2, Z:C4
    // False for order-2 elements of PSL2Z, which lie in many maximal
    // amenable subgroups; the listed type is then that of <A>.
    bool unique_maximal = true;
    std::optional<Mat2> generator;  // parabolic case
    std::optional<Mat2> witness;    // Dinf case
};

// Throws std::invalid_argument for det != 1 or central A.
AmenableTypeReport max_amenable_type(const Mat2& a);

}  // namespace modcohom
