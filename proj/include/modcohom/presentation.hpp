#pragma once

#include "modcohom/int_matrix.hpp"
#include "modcohom/mat2.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace modcohom {

struct Letter {
    std::size_t gen = 0;
    int sign = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Fully expanded word in the generators of some presentation.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> l) : letters(l) {}
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Word inverse() const;
    Word freely_reduced() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

Word power(const Word& w, int k);

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t generator_count() const { return generators.size(); }
    // Throws std::invalid_argument for unknown names.
    std::size_t index_of(std::string_view gen) const;
};

// One 2x2 matrix per generator. When `projective` is set, relators only need
// to hold up to a global sign.
struct MatrixAssignment {
    std::vector<Mat2> images;
    bool projective = false;
};

struct GroupData {
    Presentation presentation;
    MatrixAssignment matrices;
};

// Subgroup inclusion: word j in the ambient generators is the image of the
// j-th subgroup generator.
struct Embedding {
    Presentation ambient;
    std::vector<Word> words;
};

// PSL2Z, SL2Z, PGL2Z, GL2Z, or Free(k).
GroupData builtin(std::string_view name);
GroupData builtin_free(std::size_t k);

// Whitespace-separated generator names with optional ^-1, e.g. "s t^-1 s".
Word parse_word(std::string_view text, const Presentation& p);
std::string format_word(const Word& w, const Presentation& p);

Mat2 evaluate_word(const Word& w, const MatrixAssignment& m);
bool relators_hold(const Presentation& p, const MatrixAssignment& m);

// Integral linear action of a finitely presented group: one invertible matrix
// per generator, with inverses cached.
struct Representation {
    std::vector<IntMatrix> images;
    std::vector<IntMatrix> inverses;
    std::size_t dim = 0;

    static Representation from_images(std::vector<IntMatrix> images);
    // rho_n of the assigned matrices; projective assignments need even n.
    static Representation polynomial(const MatrixAssignment& m, unsigned n);

    std::size_t generator_count() const { return images.size(); }
    IntMatrix image(const Word& w) const;
    // Representation of a subgroup whose generators are the given words.
    Representation pullback(const std::vector<Word>& words) const;
};

// b(x_1 ... x_m) = sum_j rho(x_1 ... x_{j-1}) b(x_j), with b(g^-1) = -rho(g)^-1 b(g).
Vector cocycle_transport(const Word& w, const Representation& rep, const std::vector<Vector>& values);

// (d * #relators) x (d * #generators) matrix whose kernel is Z^1: block (r, g)
// is the Fox derivative of relator r with respect to generator g, evaluated in rep.
IntMatrix relator_condition_matrix(const Presentation& p, const Representation& rep);

}  // namespace modcohom
