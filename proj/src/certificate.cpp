#include "modcohom/certificate.hpp"

#include <stdexcept>

namespace modcohom {

using nlohmann::json;

namespace {

bool vanishes(const Integer& x, const Integer& modulus) {
    if (sgn(modulus) == 0) return sgn(x) == 0;
    return mpz_divisible_p(x.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

Vector reduced(Vector v, const Integer& modulus) {
    if (sgn(modulus) == 0) return v;
    for (Integer& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return v;
}

bool same_images(const Representation& a, const Representation& b) {
    return a.dim == b.dim && a.images == b.images;
}

bool relators_hold(const Presentation& p, const Representation& rep) {
    const IntMatrix id = IntMatrix::identity(rep.dim);
    for (const Word& r : p.relators)
        if (!(rep.image(r) == id)) return false;
    return true;
}

}  // namespace

std::optional<Refutation> separate(const IntMatrix& lattice, const Vector& target) {
    const SmithDecomposition snf = smith_normal_form(lattice);
    const Vector c = snf.U * target;
    for (std::size_t i = snf.rank; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return Refutation{snf.U.row(i), Integer(0)};
    for (std::size_t i = 0; i < snf.rank; ++i) {
        const Integer& d = snf.S(i, i);
        if (!vanishes(c[i], d)) return Refutation{reduced(snf.U.row(i), d), d};
    }
    return std::nullopt;
}

bool refutes(const Refutation& r, const IntMatrix& lattice, const Vector& target) {
    if (r.functional.size() != lattice.rows() || target.size() != lattice.rows() || sgn(r.modulus) < 0) return false;
    for (std::size_t j = 0; j < lattice.cols(); ++j)
        if (!vanishes(dot(r.functional, lattice.column(j)), r.modulus)) return false;
    return !vanishes(dot(r.functional, target), r.modulus);
}

IntMatrix extension_lattice(const Overgroup& l, const Representation& k_rep) {
    const IntMatrix z1 = kernel_basis(relator_condition_matrix(l.presentation, l.rep));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < z1.cols(); ++j) {
        const Cocycle b = Cocycle::from_stacked(z1.column(j), l.presentation.generator_count(), l.rep.dim);
        cols.push_back(restrict_cocycle(b, l.words, l.rep).stacked());
    }
    return hstack(IntMatrix::from_columns(k_rep.dim * l.words.size(), cols), coboundary_map(k_rep));
}

Certificate certify_nonextendable(const Presentation& k, const Representation& rep, const Cocycle& b,
                                  const std::vector<Overgroup>& overgroups) {
    Cohomology ck(k, rep);
    if (!ck.is_cocycle(b)) throw std::invalid_argument("certify_nonextendable: input is not a cocycle");

    Certificate cert{k, rep, b, {}, {}};
    auto nontrivial = separate(ck.coboundary_matrix(), b.stacked());
    if (!nontrivial) throw std::domain_error("certify_nonextendable: cocycle is a coboundary");
    cert.nontrivial = *nontrivial;

    for (const Overgroup& l : overgroups) {
        if (l.words.size() != k.generator_count())
            throw std::invalid_argument("overgroup " + l.name + ": one word per subgroup generator required");
        if (!same_images(l.rep.pullback(l.words), rep))
            throw std::invalid_argument("overgroup " + l.name + ": action does not restrict to the subgroup action");
        auto r = separate(extension_lattice(l, rep), b.stacked());
        if (!r) throw std::domain_error("certify_nonextendable: cocycle extends to " + l.name);
        cert.evidence.push_back({l, *r, restriction_cokernel(l.presentation, k, l.words, l.rep)});
    }
    return cert;
}

VerificationResult verify_certificate(const Certificate& c) {
    VerificationResult out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.messages.push_back(std::move(msg));
    };
    const std::size_t gens = c.subgroup.generator_count();
    if (c.rep.generator_count() != gens || c.cocycle.values.size() != gens) {
        fail("subgroup data has inconsistent generator counts");
        return out;
    }
    for (const Vector& v : c.cocycle.values)
        if (v.size() != c.rep.dim) {
            fail("cocycle value has wrong dimension");
            return out;
        }
    if (!relators_hold(c.subgroup, c.rep)) fail("subgroup relators do not hold in the given action");
    const Vector b = c.cocycle.stacked();
    if (!is_zero(relator_condition_matrix(c.subgroup, c.rep) * b)) fail("cocycle violates a relator condition");
    if (!refutes(c.nontrivial, coboundary_map(c.rep), b)) fail("coboundary refutation does not check");

    for (const OvergroupEvidence& e : c.evidence) {
        const Overgroup& l = e.overgroup;
        const std::string tag = "overgroup " + l.name + ": ";
        if (l.words.size() != gens || l.rep.generator_count() != l.presentation.generator_count()) {
            fail(tag + "inconsistent generator counts");
            continue;
        }
        if (!relators_hold(l.presentation, l.rep)) {
            fail(tag + "relators do not hold in the given action");
            continue;
        }
        if (!same_images(l.rep.pullback(l.words), c.rep)) {
            fail(tag + "embedding words do not reproduce the subgroup action");
            continue;
        }
        if (!refutes(e.refutation, extension_lattice(l, c.rep), b)) fail(tag + "refutation does not check");
        else out.messages.push_back(tag + "class not in the image of restriction");
    }
    if (out.ok) out.messages.push_back("certificate verified");
    return out;
}

namespace {

json integer_json(const Integer& x) { return x.get_str(); }

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer in certificate");
    return x;
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (const Integer& x : v) a.push_back(integer_json(x));
    return a;
}

Vector vector_from(const json& j) {
    Vector v;
    for (const json& x : j) v.push_back(integer_from(x));
    return v;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return rows;
}

IntMatrix matrix_from(const json& j) {
    const std::size_t n = j.size();
    const std::size_t cols = n == 0 ? 0 : j[0].size();
    IntMatrix m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("ragged matrix in certificate");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from(j[i][k]);
    }
    return m;
}

json presentation_json(const Presentation& p) {
    json rels = json::array();
    for (const Word& r : p.relators) rels.push_back(format_word(r, p));
    return {{"name", p.name}, {"generators", p.generators}, {"relators", rels}};
}

Presentation presentation_from(const json& j) {
    Presentation p;
    p.name = j.at("name").get<std::string>();
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const json& r : j.at("relators")) p.relators.push_back(parse_word(r.get<std::string>(), p));
    return p;
}

json rep_json(const Representation& r) {
    json a = json::array();
    for (const IntMatrix& m : r.images) a.push_back(matrix_json(m));
    return a;
}

Representation rep_from(const json& j) {
    std::vector<IntMatrix> images;
    for (const json& m : j) images.push_back(matrix_from(m));
    return Representation::from_images(std::move(images));
}

json refutation_json(const Refutation& r) {
    return {{"functional", vector_json(r.functional)}, {"modulus", integer_json(r.modulus)}};
}

Refutation refutation_from(const json& j) {
    return {vector_from(j.at("functional")), integer_from(j.at("modulus"))};
}

json invariants_json(const AbelianInvariants& a) {
    return {{"free_rank", a.free_rank}, {"torsion", vector_json(a.torsion)}, {"text", a.to_string()}};
}

AbelianInvariants invariants_from(const json& j) {
    return {j.at("free_rank").get<std::size_t>(), vector_from(j.at("torsion"))};
}

}  // namespace

json to_json(const Certificate& c) {
    json cocycle = json::array();
    for (const Vector& v : c.cocycle.values) cocycle.push_back(vector_json(v));
    json evidence = json::array();
    for (const OvergroupEvidence& e : c.evidence) {
        json words = json::array();
        for (const Word& w : e.overgroup.words) words.push_back(format_word(w, e.overgroup.presentation));
        evidence.push_back({{"name", e.overgroup.name},
                            {"presentation", presentation_json(e.overgroup.presentation)},
                            {"representation", rep_json(e.overgroup.rep)},
                            {"words", words},
                            {"refutation", refutation_json(e.refutation)},
                            {"restriction_cokernel", invariants_json(e.cokernel)}});
    }
    return {{"format", "modcohom-certificate"},
            {"version", 1},
            {"subgroup", presentation_json(c.subgroup)},
            {"representation", rep_json(c.rep)},
            {"cocycle", cocycle},
            {"nontrivial", refutation_json(c.nontrivial)},
            {"overgroups", evidence}};
}

Certificate certificate_from_json(const json& j) {
    if (j.value("format", "") != "modcohom-certificate") throw std::invalid_argument("not a certificate document");
    Certificate c;
    c.subgroup = presentation_from(j.at("subgroup"));
    c.rep = rep_from(j.at("representation"));
    for (const json& v : j.at("cocycle")) c.cocycle.values.push_back(vector_from(v));
    c.nontrivial = refutation_from(j.at("nontrivial"));
    for (const json& e : j.at("overgroups")) {
        OvergroupEvidence ev;
        ev.overgroup.name = e.at("name").get<std::string>();
        ev.overgroup.presentation = presentation_from(e.at("presentation"));
        ev.overgroup.rep = rep_from(e.at("representation"));
        for (const json& w : e.at("words")) ev.overgroup.words.push_back(parse_word(w.get<std::string>(), ev.overgroup.presentation));
        ev.refutation = refutation_from(e.at("refutation"));
        ev.cokernel = invariants_from(e.at("restriction_cokernel"));
        c.evidence.push_back(std::move(ev));
    }
    return c;
}

}  // namespace modcohom
