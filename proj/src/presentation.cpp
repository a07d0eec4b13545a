#include "modcohom/presentation.hpp"

#include "modcohom/linalg.hpp"
#include "modcohom/poly_rep.hpp"

#include <sstream>
#include <stdexcept>

namespace modcohom {

Word Word::inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->gen, -it->sign});
    return r;
}

Word Word::freely_reduced() const {
    Word r;
    for (const Letter& l : letters) {
        if (!r.letters.empty() && r.letters.back().gen == l.gen && r.letters.back().sign == -l.sign)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word power(const Word& w, int k) {
    const Word base = k < 0 ? w.inverse() : w;
    Word r;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
    return r;
}

std::size_t Presentation::index_of(std::string_view gen) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == gen) return i;
    throw std::invalid_argument("unknown generator '" + std::string(gen) + "' for " + name);
}

namespace {

Word letters(std::initializer_list<std::pair<std::size_t, int>> l) {
    Word w;
    for (auto [g, e] : l) w.letters.push_back({g, e});
    return w;
}

}  // namespace

GroupData builtin_free(std::size_t k) {
    if (k == 0) throw std::invalid_argument("Free(k) needs k >= 1");
    GroupData g;
    g.presentation.name = "Free(" + std::to_string(k) + ")";
    // Sanov generators a = (1 2; 0 1), b = (1 0; 2 1) generate a free group;
    // a^i b a^-i (i < k) is a free basis of a rank-k subgroup.
    const Mat2 a = Mat2::of(1, 2, 0, 1);
    const Mat2 b = Mat2::of(1, 0, 2, 1);
    for (std::size_t i = 0; i < k; ++i) {
        g.presentation.generators.push_back("x" + std::to_string(i + 1));
        const Mat2 ai = power(a, static_cast<long>(i));
        g.matrices.images.push_back(ai * b * ai.inverse());
    }
    return g;
}

GroupData builtin(std::string_view name) {
    using namespace gens;
    GroupData g;
    g.presentation.name = std::string(name);
    if (name == "PSL2Z") {
        g.presentation.generators = {"S", "T"};
        g.presentation.relators = {letters({{0, 1}, {0, 1}}), letters({{1, 1}, {1, 1}, {1, 1}})};
        g.matrices = {{s(), t()}, true};
    } else if (name == "SL2Z") {
        g.presentation.generators = {"s", "t"};
        g.presentation.relators = {letters({{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
                                   letters({{0, 1}, {0, 1}, {1, -1}, {1, -1}, {1, -1}})};
        g.matrices = {{s(), t()}, false};
    } else if (name == "PGL2Z") {
        g.presentation.generators = {"S", "T", "W"};
        g.presentation.relators = {letters({{0, 1}, {0, 1}}), letters({{1, 1}, {1, 1}, {1, 1}}), letters({{2, 1}, {2, 1}}),
                                   letters({{0, 1}, {2, 1}, {0, 1}, {2, 1}}), letters({{1, 1}, {2, 1}, {1, 1}, {2, 1}})};
        g.matrices = {{s(), t(), w()}, true};
    } else if (name == "GL2Z") {
        g.presentation.generators = {"s", "t", "w"};
        g.presentation.relators = {letters({{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
                                   letters({{0, 1}, {0, 1}, {1, -1}, {1, -1}, {1, -1}}), letters({{2, 1}, {2, 1}}),
                                   letters({{2, 1}, {0, 1}, {2, 1}, {0, 1}}), letters({{2, 1}, {1, 1}, {2, 1}, {1, 1}})};
        g.matrices = {{s(), t(), w()}, false};
    } else if (name.starts_with("Free(") && name.ends_with(")")) {
        const std::string inner(name.substr(5, name.size() - 6));
        std::size_t k = 0;
        try {
            k = std::stoul(inner);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rank in '" + std::string(name) + "'");
        }
        return builtin_free(k);
    } else {
        throw std::invalid_argument("unknown group '" + std::string(name) + "'");
    }
    return g;
}

Word parse_word(std::string_view text, const Presentation& p) {
    std::istringstream is{std::string(text)};
    Word w;
    std::string tok;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.ends_with("^-1")) {
            sign = -1;
            tok.resize(tok.size() - 3);
        }
        w.letters.push_back({p.index_of(tok), sign});
    }
    return w;
}

std::string format_word(const Word& w, const Presentation& p) {
    std::string out;
    for (const Letter& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += p.generators.at(l.gen);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

Mat2 evaluate_word(const Word& w, const MatrixAssignment& m) {
    Mat2 acc;
    for (const Letter& l : w.letters) {
        const Mat2& g = m.images.at(l.gen);
        acc = acc * (l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

bool relators_hold(const Presentation& p, const MatrixAssignment& m) {
    if (m.images.size() != p.generator_count()) return false;
    for (const Word& r : p.relators) {
        const Mat2 v = evaluate_word(r, m);
        if (!(v.is_identity() || (m.projective && (-v).is_identity()))) return false;
    }
    return true;
}

Representation Representation::from_images(std::vector<IntMatrix> images) {
    Representation rep;
    rep.dim = images.empty() ? 0 : images.front().rows();
    for (const auto& m : images) {
        if (m.rows() != rep.dim || m.cols() != rep.dim) throw std::invalid_argument("representation matrices must be square of equal size");
        rep.inverses.push_back(unimodular_inverse(m));
    }
    rep.images = std::move(images);
    return rep;
}

Representation Representation::polynomial(const MatrixAssignment& m, unsigned n) {
    if (m.projective && n % 2 != 0) throw std::invalid_argument("rho_n of a projective group needs even n");
    Representation rep;
    rep.dim = n + 1;
    for (const Mat2& g : m.images) {
        rep.images.push_back(rho_matrix(g, n));
        rep.inverses.push_back(rho_matrix(g.inverse(), n));
    }
    return rep;
}

IntMatrix Representation::image(const Word& w) const {
    IntMatrix acc = IntMatrix::identity(dim);
    for (const Letter& l : w.letters) acc = acc * (l.sign > 0 ? images.at(l.gen) : inverses.at(l.gen));
    return acc;
}

Representation Representation::pullback(const std::vector<Word>& words) const {
    Representation rep;
    rep.dim = dim;
    for (const Word& w : words) {
        rep.images.push_back(image(w));
        rep.inverses.push_back(image(w.inverse()));
    }
    return rep;
}

Vector cocycle_transport(const Word& w, const Representation& rep, const std::vector<Vector>& values) {
    if (values.size() != rep.generator_count()) throw std::invalid_argument("cocycle_transport: one value per generator required");
    Vector acc(rep.dim);
    IntMatrix prefix = IntMatrix::identity(rep.dim);
    for (const Letter& l : w.letters) {
        const Vector& v = values.at(l.gen);
        if (v.size() != rep.dim) throw std::invalid_argument("cocycle_transport: value has wrong dimension");
        if (l.sign > 0) {
            acc = add(acc, prefix * v);
            prefix = prefix * rep.images[l.gen];
        } else {
            prefix = prefix * rep.inverses[l.gen];
            acc = sub(acc, prefix * v);
        }
    }
    return acc;
}

IntMatrix relator_condition_matrix(const Presentation& p, const Representation& rep) {
    const std::size_t d = rep.dim;
    const std::size_t g = p.generator_count();
    if (rep.generator_count() != g) throw std::invalid_argument("relator_condition_matrix: one matrix per generator required");
    IntMatrix f(d * p.relators.size(), d * g);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        IntMatrix prefix = IntMatrix::identity(d);
        for (const Letter& l : p.relators[r].letters) {
            // g^-1 contributes -rho(prefix g^-1) b(g)
            if (l.sign < 0) prefix = prefix * rep.inverses[l.gen];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    if (sgn(prefix(i, j)) == 0) continue;
                    Integer& cell = f(r * d + i, l.gen * d + j);
                    if (l.sign > 0) cell += prefix(i, j);
                    else cell -= prefix(i, j);
                }
            if (l.sign > 0) prefix = prefix * rep.images[l.gen];
        }
    }
    return f;
}

}  // namespace modcohom
