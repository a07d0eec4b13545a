#include "modcohom/cli.hpp"

#include "modcohom/amenable.hpp"
#include "modcohom/certificate.hpp"
#include "modcohom/congruence.hpp"
#include "modcohom/constructions.hpp"
#include "modcohom/formulas.hpp"
#include "modcohom/pell.hpp"
#include "modcohom/poly_rep.hpp"
#include "modcohom/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace modcohom {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json params = json::object();
    json results = json::object();
    std::vector<Check> checks;
    std::vector<CaseResult> cases;  // sweeps only

    void check(std::string name, json expected, json actual) {
        const bool ok = expected == actual;
        checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    }
    void require(std::string name, bool ok, json expected, json actual) {
        checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    }
    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

json check_json(const Check& c) {
    return {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

json invariants_json(const AbelianInvariants& a) {
    json torsion = json::array();
    for (const Integer& d : a.torsion) torsion.push_back(d.get_str());
    return {{"text", a.to_string()}, {"free_rank", a.free_rank}, {"torsion", torsion}};
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (const Integer& x : v) a.push_back(x.get_str());
    return a;
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const Report& r, double seconds, std::ostream& os) {
    os << r.command;
    for (const auto& [k, v] : r.params.items()) {
        os << " --" << k;
        if (!v.is_boolean()) os << ' ' << scalar_text(v);
    }
    os << '\n';
    for (const auto& [k, v] : r.results.items()) {
        if (k == "certificate" || k == "cases") continue;
        os << "  " << k << ": " << scalar_text(v) << '\n';
    }
    for (const CaseResult& c : r.cases)
        os << "  [" << (c.pass() ? "pass" : "FAIL") << "] " << c.label << " (" << c.checks.size() << " checks)\n";
    std::size_t failed = 0;
    for (const Check& c : r.checks) {
        if (!c.pass) ++failed;
        if (r.cases.empty() || !c.pass)
            os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << scalar_text(c.expected) << ", got "
               << scalar_text(c.actual) << '\n';
    }
    os << r.checks.size() << " checks, " << failed << " failed, " << seconds << " s\n";
}

void render_json(const Report& r, double seconds, std::ostream& os) {
    json checks = json::array();
    for (const Check& c : r.checks) checks.push_back(check_json(c));
    json doc = {{"command", r.command},
                {"params", r.params},
                {"results", r.results},
                {"checks", checks},
                {"version", kVersion},
                {"timing", {{"seconds", seconds}}}};
    os << doc.dump(2) << '\n';
}

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void render_csv(const Report& r, std::ostream& os) {
    os << "case,pass,checks,failed,failed_checks\n";
    for (const CaseResult& c : r.cases) {
        std::string failed;
        std::size_t nfail = 0;
        for (const Check& k : c.checks)
            if (!k.pass) {
                failed += (nfail++ ? ";" : "") + k.name;
            }
        os << csv_field(c.label) << ',' << (c.pass() ? "true" : "false") << ',' << c.checks.size() << ',' << nfail
           << ',' << csv_field(failed) << '\n';
    }
}

// "2..40" or "7"
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const unsigned v = static_cast<unsigned>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<unsigned>(std::stoul(text.substr(0, dots))), static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "', expected A..B");
    }
}

long parse_long(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + " '" + text + "'");
    }
}

Integer parse_integer(const std::string& text, const std::string& what) {
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0) throw UsageError("bad " + what + " '" + text + "'");
    return x;
}

// "kind:rest" -> (kind, rest)
std::pair<std::string, std::string> split_kind(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return {s, ""};
    return {s.substr(0, colon), s.substr(colon + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
    return out;
}

long require_free_prime(const std::string& text) {
    const long p = parse_long(text, "prime");
    if (p <= 3 || !is_prime(p) || !torsion_criterion(p))
        throw UsageError("p = " + text + " must be a prime with p = 11 mod 12");
    return p;
}

// ---- h1 ------------------------------------------------------------------

struct NamedGroup {
    GroupData data;
    std::optional<long> expected_free_rank;
    std::string formula;
};

NamedGroup resolve_group(const std::string& spec, unsigned n) {
    const auto [kind, arg] = split_kind(spec);
    NamedGroup g;
    if (kind == "psl2" || kind == "sl2" || kind == "pgl2" || kind == "gl2") {
        static const std::map<std::string, std::string> names = {
            {"psl2", "PSL2Z"}, {"sl2", "SL2Z"}, {"pgl2", "PGL2Z"}, {"gl2", "GL2Z"}};
        g.data = builtin(names.at(kind));
        if (g.data.matrices.projective && n % 2 != 0) throw UsageError(kind + " acts on P_n only for even n");
        if (n % 2 == 0) {
            const bool gl = kind == "gl2" || kind == "pgl2";
            g.expected_free_rank = gl ? formulas::rank_gl2(n) : formulas::rank_psl2(n);
            g.formula = gl ? "(n-5+3(-1)^(n/2+1)-4eta(n))/12" : "(n+1+3(-1)^(n/2+1)-4eta(n))/6";
        } else {
            g.expected_free_rank = 0;
            g.formula = "0 (odd n)";
        }
    } else if (kind == "free") {
        const long k = parse_long(arg, "rank");
        if (k < 1) throw UsageError("free:k needs k >= 1");
        g.data = builtin_free(static_cast<std::size_t>(k));
        std::vector<IntMatrix> images;
        for (const Mat2& m : g.data.matrices.images) images.push_back(rho_matrix(m, n));
        g.expected_free_rank = (k - 1) * (long(n) + 1) + static_cast<long>(common_fixed_dim(images));
        g.formula = "(k-1)(n+1) + dim of common fixed space";
    } else if (kind == "gamma0bar") {
        const long p = require_free_prime(arg);
        const LiftedSubgroup k = lift_to_sl2(schreier_free_basis(p));
        g.data = {k.presentation, k.matrices};
        const long rank = static_cast<long>(k.words.size());
        g.expected_free_rank = (rank - 1) * (long(n) + 1);
        g.formula = "(k-1)(n+1), k = 1 + (p+1)/6";
    } else {
        throw UsageError("unknown group '" + spec + "' (psl2, sl2, pgl2, gl2, free:k, gamma0bar:p)");
    }
    return g;
}

Report cmd_h1(const std::string& group, unsigned n) {
    if (n < 1) throw UsageError("--n must be >= 1");
    Report r;
    r.command = "h1";
    r.params = {{"group", group}, {"n", n}};
    const NamedGroup g = resolve_group(group, n);
    const Cohomology c(g.data.presentation, Representation::polynomial(g.data.matrices, n));
    const AbelianInvariants& inv = c.h1().invariants;
    r.results["group"] = g.data.presentation.name;
    r.results["generators"] = g.data.presentation.generator_count();
    r.results["relators"] = g.data.presentation.relators.size();
    r.results["h1"] = invariants_json(inv);
    r.results["free_rank"] = inv.free_rank;
    if (g.expected_free_rank) {
        r.results["formula"] = g.formula;
        r.results["matches_formula"] = static_cast<long>(inv.free_rank) == *g.expected_free_rank;
        r.check("free_rank_formula", *g.expected_free_rank, inv.free_rank);
    }
    const auto [kind, arg] = split_kind(group);
    if ((kind == "gl2" || kind == "pgl2") && n % 2 == 0)
        r.check("free_rank_w_invariant_route", w_invariant_h1_rank(n), inv.free_rank);
    if (kind == "sl2" && n % 2 == 1) {
        bool all_two = true;
        for (const Integer& d : inv.torsion) all_two = all_two && d == 2;
        r.require("torsion_all_2", all_two, true, inv.to_string());
        r.require("torsion_count_le_n+1", inv.torsion.size() <= n + 1, "<= " + std::to_string(n + 1), inv.torsion.size());
    }
    return r;
}

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::string n_even = "2..40", n_odd = "1..39";
    unsigned n_max = 200;
    long p_max = 200, d_max = 50, n_abs_max = 100;
    std::size_t words = 10000, corpus = 200;
    std::uint64_t seed = 1;
};

Report cmd_verify(const VerifyOptions& o, unsigned jobs) {
    Report r;
    r.command = "verify";
    r.params["suite"] = o.suite;
    if (o.suite == "formulas") {
        const auto [elo, ehi] = parse_range(o.n_even);
        const auto [olo, ohi] = parse_range(o.n_odd);
        if (ehi > 200 || ohi > 200) throw UsageError("formula sweeps are limited to n <= 200");
        r.params["n-even"] = o.n_even;
        r.params["n-odd"] = o.n_odd;
        r.cases = suite_formulas({elo, ehi, olo, ohi}, jobs);
    } else if (o.suite == "identity") {
        if (o.n_max > 2000) throw UsageError("--n-max is limited to 2000");
        r.params["n-max"] = o.n_max;
        r.cases = suite_identity(o.n_max, jobs);
    } else if (o.suite == "congruence") {
        if (o.p_max > 2000) throw UsageError("--p-max is limited to 2000");
        r.params["p-max"] = o.p_max;
        r.params["words"] = o.words;
        r.params["seed"] = o.seed;
        CongruenceSweep s;
        s.p_max = o.p_max;
        s.words = o.words;
        s.seed = o.seed;
        r.cases = suite_congruence(s, jobs);
    } else if (o.suite == "pell") {
        if (o.d_max > 1000) throw UsageError("--d-max is limited to 1000");
        r.params["d-max"] = o.d_max;
        r.params["n-abs-max"] = o.n_abs_max;
        PellSweep s;
        s.d_max = o.d_max;
        s.n_abs_max = o.n_abs_max;
        r.cases = suite_pell(s, jobs);
    } else if (o.suite == "amenable") {
        r.params["corpus"] = o.corpus;
        r.params["seed"] = o.seed;
        AmenableSweep s;
        s.corpus = o.corpus;
        s.seed = o.seed;
        r.cases = suite_amenable(s, jobs);
    } else {
        throw UsageError("unknown suite '" + o.suite + "' (formulas, identity, congruence, pell, amenable)");
    }
    json cases = json::array();
    std::size_t failing = 0;
    for (const CaseResult& c : r.cases) {
        failing += !c.pass();
        json entry = {{"label", c.label}, {"pass", c.pass()}};
        if (!c.info.empty()) entry["info"] = c.info;
        cases.push_back(entry);
        for (const Check& k : c.checks) r.checks.push_back({c.label + "/" + k.name, k.expected, k.actual, k.pass});
    }
    r.results["cases"] = cases;
    r.results["case_count"] = r.cases.size();
    r.results["failing_cases"] = failing;
    return r;
}

// ---- witness -------------------------------------------------------------

void attach_certificate(Report& r, const std::function<Certificate()>& make, const std::string& path) {
    try {
        const Certificate cert = make();
        const json doc = to_json(cert);
        // Self-check from the serialized form only.
        const VerificationResult v = verify_certificate(certificate_from_json(json::parse(doc.dump())));
        r.require("certificate_issued", true, true, true);
        r.require("certificate_verified", v.ok, true, v.messages);
        json cokernels = json::object();
        for (const OvergroupEvidence& e : cert.evidence) cokernels[e.overgroup.name] = invariants_json(e.cokernel);
        r.results["restriction_cokernels"] = cokernels;
        r.results["certificate"] = doc;
        if (!path.empty()) {
            std::ofstream f(path);
            if (!f) throw UsageError("cannot write certificate to " + path);
            f << doc.dump(2) << '\n';
            r.results["certificate_file"] = path;
        }
    } catch (const std::domain_error& e) {
        r.require("certificate_issued", false, true, e.what());
    }
}

Report cmd_witness(const std::string& kind_spec, unsigned n, const std::string& cert_path, std::size_t samples,
                   std::uint64_t seed) {
    Report r;
    r.command = "witness";
    r.params["kind"] = kind_spec;
    const auto [kind, arg] = split_kind(kind_spec);
    if (kind == "free-lift") {
        const long p = require_free_prime(arg);
        if (n % 2 == 0) throw UsageError("free-lift needs odd n");
        r.params["n"] = n;
        const LiftedSubgroup k = lift_to_sl2(schreier_free_basis(p));
        const Representation rep = Representation::polynomial(k.matrices, n);
        const Cohomology ck(k.presentation, rep);
        const long rank = static_cast<long>(k.words.size());
        r.results["subgroup_rank"] = rank;
        r.results["subgroup_h1"] = invariants_json(ck.h1().invariants);
        r.check("subgroup_h1_free_rank", (rank - 1) * (long(n) + 1), ck.h1().invariants.free_rank);
        std::vector<Overgroup> overgroups;
        for (const OvergroupSpec& spec : k.overgroups) {
            overgroups.push_back(spec.with_rep(n));
            const AbelianInvariants h = Cohomology(spec.presentation, overgroups.back().rep).h1().invariants;
            r.results["overgroup_h1"][spec.name] = invariants_json(h);
            r.check("overgroup_h1_is_torsion[" + spec.name + "]", 0, h.free_rank);
        }
        if (ck.h1().free_basis.empty()) {
            r.require("infinite_order_class_exists", false, true, false);
            return r;
        }
        const Cocycle b = ck.h1().free_basis.front();
        r.results["cocycle"] = json::array();
        for (const Vector& v : b.values) r.results["cocycle"].push_back(vector_json(v));
        r.require("cocycle_infinite_order", !ck.class_order(b).has_value(), "infinite", "infinite");
        attach_certificate(r, [&] { return certify_nonextendable(k.presentation, rep, b, overgroups); }, cert_path);
    } else if (kind == "ba" || kind == "beps") {
        const auto parts = split(arg, ',');
        if (parts.size() != 2) throw UsageError(kind + " expects " + kind + ":n," + (kind == "ba" ? "a" : "bits"));
        const long nn = parse_long(parts[0], "n");
        if (nn < 2 || nn % 2 != 0) throw UsageError(kind + " needs even n >= 2");
        const auto ne = static_cast<unsigned>(nn);
        const GroupData sl = builtin("SL2Z"), gl = builtin("GL2Z");
        if (kind == "ba") {
            const Integer a = parse_integer(parts[1], "a");
            const Representation rep = Representation::polynomial(sl.matrices, ne);
            const Cohomology c(sl.presentation, rep);
            const Cocycle b = make_ba(ne, a);
            r.require("is_cocycle", c.is_cocycle(b), true, c.is_cocycle(b));
            const auto order = c.class_order(b);
            r.results["class_order"] = order ? order->get_str() : "infinite";
            const Overgroup l{"GL2Z", gl.presentation, Representation::polynomial(gl.matrices, ne),
                              {parse_word("s", gl.presentation), parse_word("t", gl.presentation)}};
            attach_certificate(r, [&] { return certify_nonextendable(sl.presentation, rep, b, {l}); }, cert_path);
            if (r.results.contains("restriction_cokernels"))
                r.check("restriction_cokernel_free_rank", formulas::restriction_cokernel_rank(ne),
                        r.results["restriction_cokernels"]["GL2Z"]["free_rank"]);
        } else {
            const std::string& bits = parts[1];
            const auto m = static_cast<std::size_t>(formulas::beps_count(ne));
            if (bits.size() != m || bits.find_first_not_of("01") != std::string::npos)
                throw UsageError("beps:" + parts[0] + " needs exactly " + std::to_string(m) + " bits");
            std::vector<bool> eps;
            for (char ch : bits) eps.push_back(ch == '1');
            const Representation rep = Representation::polynomial(gl.matrices, ne);
            const Cohomology c(gl.presentation, rep);
            const Cocycle b = make_beps(ne, eps);
            r.require("is_cocycle", c.is_cocycle(b), true, c.is_cocycle(b));
            const auto order = c.class_order(b);
            r.results["class_order"] = order ? order->get_str() : "infinite";
            r.results["h1"] = invariants_json(c.h1().invariants);
            attach_certificate(r, [&] { return certify_nonextendable(gl.presentation, rep, b, {}); }, cert_path);
        }
    } else if (kind == "gammaN") {
        const long level = parse_long(arg, "level");
        if (level < 1) throw UsageError("gammaN needs N >= 1");
        r.params["samples"] = samples;
        r.params["seed"] = seed;
        CongruenceSweep s;
        s.p_max = 0;
        s.levels = {level};
        s.words = samples;
        s.seed = seed;
        const auto cases = suite_congruence(s, 1);
        for (const Check& k : cases.front().checks) r.checks.push_back(k);
        r.results["certificate"] = nullptr;
        r.results["note"] = "report only: b_N integrality compared with Gamma_1(N) membership on random words";
    } else {
        throw UsageError("unknown witness kind '" + kind_spec + "' (free-lift:p, ba:n,a, beps:n,bits, gammaN:N)");
    }
    return r;
}

// ---- classify ------------------------------------------------------------

Report cmd_classify(const std::string& text) {
    Report r;
    r.command = "classify";
    r.params["matrix"] = text;
    Mat2 a;
    try {
        a = parse_mat2(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (a.det() != 1) throw UsageError("matrix " + text + " has determinant " + a.det().get_str() + ", expected 1");
    const ElementClass cls = classify(a);
    r.results["class"] = cls.to_string();
    r.results["trace"] = a.trace().get_str();
    if (cls.kind == ElementClass::Kind::Central) return r;
    const AmenableTypeReport t = max_amenable_type(a);
    r.results["psl_type"] = t.psl_type;
    r.results["sl2_type"] = t.sl2_type;
    r.results["unique_maximal"] = t.unique_maximal;
    r.results["generator"] = t.generator ? json(format_mat2(*t.generator)) : json(nullptr);
    r.results["witness"] = t.witness ? json(format_mat2(*t.witness)) : json(nullptr);
    if (cls.kind == ElementClass::Kind::Hyperbolic) {
        const QForm q = qform(a);
        r.results["qform"] = {q.a.get_str(), q.b.get_str(), q.c.get_str()};
        r.results["discriminant"] = q.discriminant().get_str();
    }
    if (t.witness) {
        const Mat2& b = *t.witness;
        const bool ok = sgn(b.trace()) == 0 && b.det() == 1 && b * a == a.inverse() * b;
        r.require("witness_conjugates_to_inverse", ok, true, ok);
    }
    if (t.generator) {
        // g = 1 + N with N nilpotent, so g^k = 1 + kN.
        const Mat2& g = *t.generator;
        const Mat2 m = sgn(a.trace()) > 0 ? a : -a;
        const Integer n[] = {g.a11 - 1, g.a12, g.a21, g.a22 - 1};
        const Integer d[] = {m.a11 - 1, m.a12, m.a21, m.a22 - 1};
        std::optional<Integer> k;
        for (int i = 0; i < 4 && !k; ++i)
            if (sgn(n[i]) != 0) k = Integer(d[i] / n[i]);
        const bool ok = k && sgn(*k) > 0 && (power(g, k->get_si()) == m);
        r.results["exponent"] = k ? k->get_str() : "none";
        r.require("matrix_is_positive_power_of_generator", ok, true, ok);
    }
    return r;
}

// ---- pell ----------------------------------------------------------------

Report cmd_pell(const std::string& dtext, bool neg, bool four, const std::optional<std::string>& solve) {
    Report r;
    r.command = "pell";
    r.params["d"] = dtext;
    const Integer d = parse_integer(dtext, "D");
    if (d <= 1 || is_square(d)) throw UsageError("D must be a positive non-square");
    auto pair = [](const Integer& x, const Integer& y) { return json::array({x.get_str(), y.get_str()}); };
    const CFExpansion cf = cf_sqrt(d);
    r.results["cf"] = {{"a0", cf.a0.get_str()}, {"period", vector_json(cf.period)}};
    const PellSolution plus = pell_plus(d);
    r.results["plus"] = pair(plus.x, plus.y);
    r.check("plus_norm", 1, Integer(plus.x * plus.x - d * plus.y * plus.y).get_si());
    if (neg) {
        r.params["neg"] = true;
        const auto m = pell_minus(d);
        r.results["minus"] = m ? pair(m->x, m->y) : json(nullptr);
        if (m) r.check("minus_norm", -1, Integer(m->x * m->x - d * m->y * m->y).get_si());
    }
    if (four) {
        r.params["four"] = true;
        const PellSolution f = pell4(d);
        r.results["four"] = pair(f.x, f.y);
        r.check("four_norm", 4, Integer(f.x * f.x - d * f.y * f.y).get_si());
    }
    if (solve) {
        r.params["solve"] = *solve;
        const Integer n = parse_integer(*solve, "N");
        if (sgn(n) == 0) throw UsageError("--solve needs N != 0");
        const NormEquationResult s = solve_norm_equation(d, n);
        json reps = json::array();
        bool ok = true;
        for (const NormSolution& v : s.representatives) {
            reps.push_back(pair(v.u, v.y));
            ok = ok && v.u * v.u - d * v.y * v.y == n;
        }
        r.results["solve"] = {{"N", n.get_str()}, {"representatives", reps}, {"automorph", pair(s.automorph.x, s.automorph.y)}};
        r.require("representatives_satisfy_equation", ok, true, ok);
    }
    return r;
}

// ---- verify-certificate --------------------------------------------------

Report cmd_verify_certificate(const std::string& path) {
    Report r;
    r.command = "verify-certificate";
    r.params["file"] = path;
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    Certificate c;
    try {
        c = certificate_from_json(json::parse(f));
    } catch (const std::exception& e) {
        throw UsageError(std::string("malformed certificate: ") + e.what());
    }
    const VerificationResult v = verify_certificate(c);
    r.results["subgroup"] = c.subgroup.name;
    json names = json::array();
    for (const OvergroupEvidence& e : c.evidence) names.push_back(e.overgroup.name);
    r.results["overgroups"] = names;
    r.require("certificate_verified", v.ok, true, v.messages);
    return r;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("MODCOHOM_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact H^1 computations for the polynomial representations of GL2(Z) and its subgroups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text", out_path;
    unsigned jobs = default_jobs();
    auto common = [&](CLI::App* sub, bool csv) {
        sub->add_option("--format", format, "Output format")
            ->check(csv ? CLI::IsMember({"text", "json", "csv"}) : CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "Write the report to FILE instead of stdout");
    };

    std::string group;
    unsigned n = 1;
    auto* h1 = app.add_subcommand("h1", "H^1 of a named group with coefficients in P_n(Z)");
    h1->add_option("--group", group, "psl2 | sl2 | pgl2 | gl2 | free:k | gamma0bar:p")->required();
    h1->add_option("--n", n, "Degree n >= 1")->required();
    common(h1, false);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("--suite", vo.suite, "formulas | identity | congruence | pell | amenable")->required();
    verify->add_option("--n-even", vo.n_even, "Even n range for the formulas suite")->capture_default_str();
    verify->add_option("--n-odd", vo.n_odd, "Odd n range for the formulas suite")->capture_default_str();
    verify->add_option("--n-max", vo.n_max, "Largest n for the identity suite")->capture_default_str();
    verify->add_option("--p-max", vo.p_max, "Largest prime for the congruence suite")->capture_default_str();
    verify->add_option("--d-max", vo.d_max, "Largest D for the pell suite")->capture_default_str();
    verify->add_option("--n-abs-max", vo.n_abs_max, "Largest |N| for norm equations")->capture_default_str();
    verify->add_option("--words", vo.words, "Random words per level for b_N")->capture_default_str();
    verify->add_option("--corpus", vo.corpus, "Hyperbolic matrices in the amenable corpus")->capture_default_str();
    verify->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads (env MODCOHOM_JOBS)")->check(CLI::PositiveNumber);
    common(verify, true);

    std::string kind, cert_path;
    unsigned wn = 1;
    std::size_t samples = 10000;
    std::uint64_t wseed = 1;
    auto* witness = app.add_subcommand("witness", "Build and certify a non-extendable cocycle");
    witness->add_option("--kind", kind, "free-lift:p | ba:n,a | beps:n,bits | gammaN:N")->required();
    witness->add_option("--n", wn, "Degree for free-lift (odd)")->capture_default_str();
    witness->add_option("--cert", cert_path, "Write the certificate to FILE");
    witness->add_option("--samples", samples, "Random words for gammaN")->capture_default_str();
    witness->add_option("--seed", wseed, "Random seed for gammaN")->capture_default_str();
    common(witness, false);

    std::string matrix;
    auto* cls = app.add_subcommand("classify", "Classify an element of SL2(Z) and its maximal amenable subgroup");
    cls->add_option("--matrix", matrix, "Matrix as a,b;c,d")->required();
    common(cls, false);

    std::string dtext;
    bool neg = false, four = false;
    std::string solve_text;
    auto* pell = app.add_subcommand("pell", "Continued fraction and Pell equation data for D");
    pell->add_option("--d", dtext, "Non-square D > 1")->required();
    pell->add_flag("--neg", neg, "Also solve x^2 - D y^2 = -1");
    pell->add_flag("--four", four, "Also solve t^2 - D s^2 = 4");
    auto* solve_opt = pell->add_option("--solve", solve_text, "Solve u^2 - D y^2 = N modulo automorphs");
    common(pell, false);

    std::string cert_file;
    auto* vc = app.add_subcommand("verify-certificate", "Re-check a certificate file");
    vc->add_option("--file", cert_file, "Certificate JSON")->required();
    common(vc, false);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (h1->parsed()) report = cmd_h1(group, n);
        else if (verify->parsed()) report = cmd_verify(vo, jobs);
        else if (witness->parsed()) report = cmd_witness(kind, wn, cert_path, samples, wseed);
        else if (cls->parsed()) report = cmd_classify(matrix);
        else if (pell->parsed())
            report = cmd_pell(dtext, neg, four, solve_opt->count() ? std::optional<std::string>(solve_text) : std::nullopt);
        else report = cmd_verify_certificate(cert_file);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << '\n';
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? out : file;
    if (format == "json") render_json(report, seconds, os);
    else if (format == "csv") render_csv(report, os);
    else render_text(report, seconds, os);
    return report.pass() ? 0 : 1;
}

}  // namespace modcohom
