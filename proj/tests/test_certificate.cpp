#include "doctest.h"

#include "modcohom/certificate.hpp"
#include "modcohom/congruence.hpp"
#include "modcohom/constructions.hpp"

using namespace modcohom;
using nlohmann::json;

namespace {

struct BaSetup {
    GroupData sl = builtin("SL2Z");
    GroupData gl = builtin("GL2Z");
    Representation rep;
    Overgroup overgroup;

    explicit BaSetup(unsigned n)
        : rep(Representation::polynomial(sl.matrices, n)),
          overgroup{"GL2Z", gl.presentation, Representation::polynomial(gl.matrices, n),
                    {parse_word("s", gl.presentation), parse_word("t", gl.presentation)}} {}
};

}  // namespace

TEST_CASE("separating functionals") {
    const IntMatrix lattice{{2, 0}, {0, 3}, {0, 0}};
    CHECK_FALSE(separate(lattice, Vector{4, 3, 0}).has_value());
    // Outside the rational span: exact functional.
    const auto exact = separate(lattice, Vector{0, 0, 1});
    REQUIRE(exact.has_value());
    CHECK(exact->modulus == 0);
    CHECK(refutes(*exact, lattice, Vector{0, 0, 1}));
    // Inside the span but not the lattice: modular functional.
    const auto modular = separate(lattice, Vector{1, 0, 0});
    REQUIRE(modular.has_value());
    CHECK(modular->modulus > 1);
    CHECK(refutes(*modular, lattice, Vector{1, 0, 0}));
    CHECK_FALSE(refutes(*modular, lattice, Vector{2, 0, 0}));
}

TEST_CASE("b_a certificate against GL2Z") {
    const BaSetup s(2);
    const Cocycle b = make_ba(2, 1);
    const Certificate cert = certify_nonextendable(s.sl.presentation, s.rep, b, {s.overgroup});
    CHECK(verify_certificate(cert).ok);
    REQUIRE(cert.evidence.size() == 1);
    CHECK(cert.evidence[0].cokernel.free_rank == 1);
    // JSON round trip preserves every field the verifier reads.
    const json doc = to_json(cert);
    CHECK(doc.at("format") == "modcohom-certificate");
    const Certificate back = certificate_from_json(json::parse(doc.dump()));
    CHECK(back.cocycle == cert.cocycle);
    CHECK(back.rep.images == cert.rep.images);
    CHECK(to_json(back) == doc);
    CHECK(verify_certificate(back).ok);
}

TEST_CASE("tampered certificates are rejected") {
    const BaSetup s(2);
    const Certificate good = certify_nonextendable(s.sl.presentation, s.rep, make_ba(2, 1), {s.overgroup});

    Certificate bad_functional = good;
    bad_functional.evidence[0].refutation.functional.assign(bad_functional.evidence[0].refutation.functional.size(), 0);
    CHECK_FALSE(verify_certificate(bad_functional).ok);

    Certificate bad_cocycle = good;
    bad_cocycle.cocycle.values[1][0] += 1;
    CHECK_FALSE(verify_certificate(bad_cocycle).ok);

    Certificate bad_rep = good;
    bad_rep.evidence[0].overgroup.rep.images[2] = IntMatrix::identity(3);
    CHECK_FALSE(verify_certificate(bad_rep).ok);

    Certificate bad_words = good;
    bad_words.evidence[0].overgroup.words[0] = parse_word("w", s.gl.presentation);
    CHECK_FALSE(verify_certificate(bad_words).ok);
}

TEST_CASE("certification refuses coboundaries and extendable classes") {
    const BaSetup s(10);
    const Cohomology sl(s.sl.presentation, s.rep);
    CHECK_THROWS_AS(certify_nonextendable(s.sl.presentation, s.rep, sl.coboundary(Vector(11, 1)), {s.overgroup}),
                    std::domain_error);
    // Completeness control: a class restricted from GL2Z does extend.
    const Cohomology gl(s.gl.presentation, s.overgroup.rep);
    REQUIRE_FALSE(gl.h1().free_basis.empty());
    const Cocycle restricted = restrict_cocycle(gl.h1().free_basis.front(), s.overgroup.words, s.overgroup.rep);
    CHECK(sl.is_cocycle(restricted));
    CHECK_THROWS_AS(certify_nonextendable(s.sl.presentation, s.rep, restricted, {s.overgroup}), std::domain_error);
}

TEST_CASE("free lift certificate for p = 11") {
    const LiftedSubgroup k = lift_to_sl2(schreier_free_basis(11));
    for (unsigned n : {1u, 3u}) {
        const Representation rep = Representation::polynomial(k.matrices, n);
        const Cohomology c(k.presentation, rep);
        std::vector<Overgroup> over;
        for (const OvergroupSpec& spec : k.overgroups) over.push_back(spec.with_rep(n));
        for (const Cocycle& b : c.h1().free_basis) {
            const Certificate cert = certify_nonextendable(k.presentation, rep, b, over);
            CHECK(verify_certificate(certificate_from_json(to_json(cert))).ok);
        }
    }
}
