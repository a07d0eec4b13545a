#include "modcohom/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace modcohom {

Cocycle Cocycle::zero(std::size_t generators, std::size_t dim) {
    return Cocycle{std::vector<Vector>(generators, Vector(dim))};
}

Cocycle Cocycle::from_stacked(const Vector& stacked, std::size_t generators, std::size_t dim) {
    if (stacked.size() != generators * dim) throw std::invalid_argument("Cocycle::from_stacked: length mismatch");
    Cocycle b;
    for (std::size_t g = 0; g < generators; ++g)
        b.values.emplace_back(stacked.begin() + static_cast<std::ptrdiff_t>(g * dim),
                              stacked.begin() + static_cast<std::ptrdiff_t>((g + 1) * dim));
    return b;
}

Vector Cocycle::stacked() const {
    Vector out;
    for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
    return out;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("cocycle sum: generator count mismatch");
    Cocycle r;
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(add(a.values[i], b.values[i]));
    return r;
}

Cocycle operator-(const Cocycle& a, const Cocycle& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("cocycle difference: generator count mismatch");
    Cocycle r;
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(sub(a.values[i], b.values[i]));
    return r;
}

Cocycle operator*(const Integer& k, const Cocycle& a) {
    Cocycle r;
    for (const auto& v : a.values) r.values.push_back(scale(k, v));
    return r;
}

IntMatrix coboundary_map(const Representation& rep) {
    IntMatrix d(rep.dim * rep.generator_count(), rep.dim);
    for (std::size_t g = 0; g < rep.generator_count(); ++g)
        for (std::size_t i = 0; i < rep.dim; ++i) {
            for (std::size_t j = 0; j < rep.dim; ++j) d(g * rep.dim + i, j) = rep.images[g](i, j);
            d(g * rep.dim + i, i) -= 1;
        }
    return d;
}

Cohomology::Cohomology(Presentation p, Representation rep)
    : p_(std::move(p)),
      rep_(std::move(rep)),
      relators_(relator_condition_matrix(p_, rep_)),
      z1_(kernel_basis(relators_)),
      b1_(coboundary_map(rep_)),
      b1_solver_(b1_) {
    const std::size_t z = z1_.cols();
    z1_solver_.emplace(z1_);
    IntMatrix coords(z, rep_.dim);
    for (std::size_t j = 0; j < rep_.dim; ++j) {
        auto x = z1_solver_->solve(b1_.column(j));
        if (!x) throw std::logic_error("coboundary outside the cocycle lattice");
        coords.set_column(j, *x);
    }
    quotient_ = smith_normal_form(coords);

    result_.invariants.free_rank = z - quotient_.rank;
    for (std::size_t i = 0; i < quotient_.rank; ++i) {
        const Integer& d = quotient_.S(i, i);
        if (d == 1) continue;
        torsion_rows_.push_back(i);
        result_.invariants.torsion.push_back(d);
    }
    auto lift = [&](std::size_t i) {
        return Cocycle::from_stacked(z1_ * quotient_.U_inv.column(i), p_.generator_count(), rep_.dim);
    };
    for (std::size_t i : torsion_rows_) result_.torsion_basis.emplace_back(lift(i), quotient_.S(i, i));
    for (std::size_t i = quotient_.rank; i < z; ++i) result_.free_basis.push_back(lift(i));
}

bool Cohomology::is_cocycle(const Cocycle& b) const {
    if (b.values.size() != p_.generator_count()) return false;
    for (const auto& v : b.values)
        if (v.size() != rep_.dim) return false;
    return is_zero(relators_ * b.stacked());
}

Cocycle Cohomology::coboundary(const Vector& p) const {
    return Cocycle::from_stacked(b1_ * p, p_.generator_count(), rep_.dim);
}

std::optional<Vector> Cohomology::coboundary_witness(const Cocycle& b) const {
    return b1_solver_.solve(b.stacked());
}

ClassCoordinates Cohomology::class_coordinates(const Cocycle& b) const {
    auto c = z1_solver_->solve(b.stacked());
    if (!c) throw std::invalid_argument("class_coordinates: not a cocycle");
    Vector y = quotient_.U * *c;
    ClassCoordinates out;
    for (std::size_t i : torsion_rows_) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), quotient_.S(i, i).get_mpz_t());
        out.torsion.push_back(r);
    }
    for (std::size_t i = quotient_.rank; i < y.size(); ++i) out.free.push_back(y[i]);
    return out;
}

std::optional<Integer> Cohomology::class_order(const Cocycle& b) const {
    ClassCoordinates c = class_coordinates(b);
    if (!is_zero(c.free)) return std::nullopt;
    Integer order = 1;
    for (std::size_t k = 0; k < c.torsion.size(); ++k) {
        const Integer& d = quotient_.S(torsion_rows_[k], torsion_rows_[k]);
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.torsion[k].get_mpz_t());
        Integer part = d / g;
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
    }
    return order;
}

Cocycle Cohomology::cocycle_from_basis(std::size_t column) const {
    return Cocycle::from_stacked(z1_.column(column), p_.generator_count(), rep_.dim);
}

H1Result h1(const Presentation& p, const Representation& rep) { return Cohomology(p, rep).h1(); }

std::optional<Vector> is_coboundary(const Presentation& p, const Representation& rep, const Cocycle& b) {
    return Cohomology(p, rep).coboundary_witness(b);
}

std::optional<Integer> class_order(const Presentation& p, const Representation& rep, const Cocycle& b) {
    return Cohomology(p, rep).class_order(b);
}

Cocycle restrict_cocycle(const Cocycle& b, const std::vector<Word>& words, const Representation& rep) {
    Cocycle r;
    for (const Word& w : words) r.values.push_back(cocycle_transport(w, rep, b.values));
    return r;
}

AbelianInvariants restriction_cokernel(const Presentation& l, const Presentation& k, const std::vector<Word>& words,
                                       const Representation& rep) {
    if (words.size() != k.generator_count()) throw std::invalid_argument("restriction_cokernel: one word per subgroup generator required");
    Cohomology big(l, rep);
    Cohomology small(k, rep.pullback(words));
    const H1Result& hk = small.h1();
    const std::size_t t = hk.invariants.torsion.size();
    const std::size_t dim = t + hk.invariants.free_rank;

    std::vector<Vector> relations;
    for (std::size_t i = 0; i < t; ++i) {
        Vector e(dim);
        e[i] = hk.invariants.torsion[i];
        relations.push_back(e);
    }
    auto push_image = [&](const Cocycle& c) {
        ClassCoordinates cc = small.class_coordinates(restrict_cocycle(c, words, rep));
        Vector v = cc.torsion;
        v.insert(v.end(), cc.free.begin(), cc.free.end());
        relations.push_back(v);
    };
    for (const auto& c : big.h1().free_basis) push_image(c);
    for (const auto& [c, order] : big.h1().torsion_basis) push_image(c);
    return cokernel_invariants(IntMatrix::from_columns(dim, relations));
}

}  // namespace modcohom
