#pragma once

#include "modcohom/int_matrix.hpp"

#include <string>
#include <string_view>

namespace modcohom {

// 2x2 integer matrix (a11 a12; a21 a22).
struct Mat2 {
    Integer a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static Mat2 identity() { return {}; }
    static Mat2 of(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

    Integer det() const { return a11 * a22 - a12 * a21; }
    Integer trace() const { return a11 + a22; }
    // Requires det = +-1.
    Mat2 inverse() const;
    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
    bool is_identity() const { return a11 == 1 && a12 == 0 && a21 == 0 && a22 == 1; }
    bool is_central() const { return a12 == 0 && a21 == 0 && abs(a11) == 1 && a11 == a22; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 power(const Mat2& m, long k);
bool equal_up_to_sign(const Mat2& x, const Mat2& y);

// Named group elements.
namespace gens {
inline Mat2 s() { return Mat2::of(0, -1, 1, 0); }
inline Mat2 t() { return Mat2::of(0, -1, 1, 1); }
inline Mat2 epsilon() { return Mat2::of(-1, 0, 0, -1); }
inline Mat2 w() { return Mat2::of(0, 1, 1, 0); }
}  // namespace gens

// Text format "a,b;c,d".
Mat2 parse_mat2(std::string_view text);
std::string format_mat2(const Mat2& m);

}  // namespace modcohom
