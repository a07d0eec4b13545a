#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modcohom {

struct Check {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    bool pass = false;
};

// Checks recorded for one parameter value of a sweep (one n, p or D).
struct CaseResult {
    std::string label;
    std::vector<Check> checks;
    nlohmann::json info = nlohmann::json::object();  // measurements that are not checks

    bool pass() const;
    void expect(std::string name, nlohmann::json expected, nlohmann::json actual);
    void require(std::string name, bool ok, nlohmann::json expected, nlohmann::json actual);
};

struct FormulaSweep {
    unsigned even_lo = 2, even_hi = 40;
    unsigned odd_lo = 1, odd_hi = 39;
};

// H^1 ranks and invariants of PSL2Z, SL2Z and GL2Z against the closed forms,
// kernel dimensions against their closed forms, the 2-torsion lower bound and
// distinctness of the b_eps classes; odd n on SL2Z.
std::vector<CaseResult> suite_formulas(const FormulaSweep& range, unsigned jobs);

// Trace of rho_n(t) and the alternating diagonal sum against eta(n).
std::vector<CaseResult> suite_identity(unsigned n_max, unsigned jobs);

struct CongruenceSweep {
    long p_max = 200;
    std::vector<long> levels = {2, 3, 5, 11};
    std::size_t words = 10000;
    std::size_t max_word_length = 20;
    std::uint64_t seed = 1;
};

// Torsion criterion, torsion witnesses, Schreier bases and the b_N test.
std::vector<CaseResult> suite_congruence(const CongruenceSweep& sweep, unsigned jobs);

struct PellSweep {
    long d_max = 50;
    long n_abs_max = 100;
    long brute_bound = 10000;
};

// Fundamental solutions against brute force and orbit completeness.
std::vector<CaseResult> suite_pell(const PellSweep& sweep, unsigned jobs);

struct AmenableSweep {
    std::size_t corpus = 200;
    long trace_max = 20;
    long brute_bound = 50;
    std::uint64_t seed = 7;
};

// Fixed classification examples plus dinf_decision against brute force.
std::vector<CaseResult> suite_amenable(const AmenableSweep& sweep, unsigned jobs);

}  // namespace modcohom
