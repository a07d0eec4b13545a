#pragma once

#include "modcohom/cohomology.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace modcohom {

// An overgroup L of K: its presentation, its action on the lattice and the
// words expressing the generators of K in the generators of L.
struct Overgroup {
    std::string name;
    Presentation presentation;
    Representation rep;
    std::vector<Word> words;
};

// A linear functional phi with phi(col) = 0 mod `modulus` for every generator
// of some lattice and phi(b) != 0 mod `modulus`. Modulus 0 means exact
// vanishing over Z. Such a phi proves b is not in the lattice.
struct Refutation {
    Vector functional;
    Integer modulus;
};

struct OvergroupEvidence {
    Overgroup overgroup;
    Refutation refutation;          // b not in res(Z^1(L)) + B^1(K)
    AbelianInvariants cokernel;     // H^1(K) / res(H^1(L)), informational
};

struct Certificate {
    Presentation subgroup;
    Representation rep;
    Cocycle cocycle;
    Refutation nontrivial;          // b not in B^1(K)
    std::vector<OvergroupEvidence> evidence;
};

struct VerificationResult {
    bool ok = true;
    std::vector<std::string> messages;
};

// Finds a functional separating `target` from the column lattice of `lattice`,
// or nullopt when target lies in it. Exact (modulus 0) functionals are preferred.
std::optional<Refutation> separate(const IntMatrix& lattice, const Vector& target);
bool refutes(const Refutation& r, const IntMatrix& lattice, const Vector& target);

// Stacked restrictions of a Z-basis of Z^1(L), followed by the coboundary
// generators of K. Its column lattice is res(Z^1(L)) + B^1(K).
IntMatrix extension_lattice(const Overgroup& l, const Representation& k_rep);

// Throws std::domain_error when b is a coboundary or extends to some overgroup.
// The caller supplies the complete list of overgroups.
Certificate certify_nonextendable(const Presentation& k, const Representation& rep, const Cocycle& b,
                                  const std::vector<Overgroup>& overgroups);

// Re-derives every lattice from presentations and matrices and re-checks each
// refutation. Does not trust anything computed by the issuer.
VerificationResult verify_certificate(const Certificate& c);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace modcohom
