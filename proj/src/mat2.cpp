#include "modcohom/mat2.hpp"

#include <stdexcept>
#include <string>

namespace modcohom {

Mat2 Mat2::inverse() const {
    const Integer d = det();
    if (d == 1) return {a22, -a12, -a21, a11};
    if (d == -1) return {-a22, a12, a21, -a11};
    throw std::domain_error("Mat2::inverse: determinant is not +-1");
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 power(const Mat2& m, long k) {
    Mat2 base = k < 0 ? m.inverse() : m;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Mat2 acc;
    while (e) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool equal_up_to_sign(const Mat2& x, const Mat2& y) { return x == y || x == -y; }

Mat2 parse_mat2(std::string_view text) {
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t') cleaned.push_back(c);
    Integer v[4];
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
        const char sep = k == 1 ? ';' : ',';
        std::size_t end = k == 3 ? cleaned.size() : cleaned.find(sep, pos);
        if (end == std::string::npos) throw std::invalid_argument("matrix must look like a,b;c,d");
        std::string field = cleaned.substr(pos, end - pos);
        if (field.empty() || v[k].set_str(field[0] == '+' ? field.substr(1) : field, 10) != 0)
            throw std::invalid_argument("bad matrix entry '" + field + "'");
        pos = end + 1;
    }
    return {v[0], v[1], v[2], v[3]};
}

std::string format_mat2(const Mat2& m) {
    return m.a11.get_str() + "," + m.a12.get_str() + ";" + m.a21.get_str() + "," + m.a22.get_str();
}

}  // namespace modcohom
