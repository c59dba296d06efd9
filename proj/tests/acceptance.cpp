// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <semicomm/audit.hpp>
#include <semicomm/construct.hpp>
#include <semicomm/decompose.hpp>
#include <semicomm/enumerate.hpp>
#include <semicomm/gmap.hpp>
#include <semicomm/proof/bundled.hpp>
#include <semicomm/proof/model.hpp>
#include <semicomm/proof/prover9.hpp>

#include "oracles.hpp"
#include "proof_checks.hpp"

using namespace semicomm;

namespace {

// Pinned limits.
constexpr double enumeration_limit_s = 60.0;
constexpr double main1_limit_s = 300.0;
constexpr double gmap_limit_s = 10.0;
constexpr std::size_t fuzz_mutations = 200;
constexpr std::uint64_t fuzz_seed = 0xACCE97;
constexpr double required_agreement = 1.0;
// Labeled semigroup counts of orders 1..4 from the published census.
constexpr std::size_t census[] = {1, 8, 113, 3492};

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

std::vector<Semigroup> universe(std::size_t max_order, std::function<bool(const Semigroup&)> filter = {}) {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
        EnumerationOptions opt;
        opt.order = n;
        opt.filter = filter;
        for (auto& s : all_semigroups(opt))
            out.push_back(std::move(s));
    }
    return out;
}

std::string audit_line(const AuditResult& r) {
    return r.claim + ": models=" + std::to_string(r.models_checked) +
           " hypothesis=" + std::to_string(r.hypothesis_models) +
           " violations=" + std::to_string(r.violations.size());
}

void require_no_violations(Outcome& o, const AuditResult& r) {
    if (!r.violations.empty()) {
        o.pass = false;
        o.detail += " first violation: " + r.violations.front().description + ";";
    }
}

Outcome enumeration_counts() {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream d;
    for (std::size_t n = 1; n <= 4; ++n) {
        EnumerationOptions opt;
        opt.order = n;
        const auto c = count_semigroups(opt);
        d << "n=" << n << ":" << c << " ";
        if (c != census[n - 1])
            o.pass = false;
        if (n <= 3 && c != oracle::count_associative(n)) {
            o.pass = false;
            d << "(naive disagrees) ";
        }
    }
    // Order 4 slices by first row against the naive count.
    for (const oracle::Cells& row0 : {oracle::Cells{0, 0, 0, 0}, oracle::Cells{0, 1, 2, 3}, oracle::Cells{1, 1, 1, 1}}) {
        EnumerationOptions opt;
        opt.order = 4;
        opt.filter = [&](const Semigroup& s) {
            for (std::size_t y = 0; y < 4; ++y)
                if (s.at(0, y) != row0[y])
                    return false;
            return true;
        };
        if (count_semigroups(opt) != oracle::count_with_first_row(4, row0)) {
            o.pass = false;
            d << "(slice disagrees) ";
        }
    }
    const double t = seconds_since(t0);
    d << "time=" << fmt_seconds(t) << " limit=" << fmt_seconds(enumeration_limit_s);
    if (t >= enumeration_limit_s)
        o.pass = false;
    o.detail = d.str();
    return o;
}

Outcome main1_audit() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::pair<std::uint64_t, std::uint64_t> pqs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    for (auto [p, q] : pqs) {
        ClaimParams params;
        params.p = p;
        params.q = q;
        auto r = audit_theorem(Claim::main1, 4, params);
        o.detail += " (" + std::to_string(p) + "," + std::to_string(q) + ") models=" +
                    std::to_string(r.models_checked) + " violations=" + std::to_string(r.violations.size()) + ";";
        require_no_violations(o, r);
    }
    const double t = seconds_since(t0);
    o.detail += " time=" + fmt_seconds(t) + " limit=" + fmt_seconds(main1_limit_s);
    if (t >= main1_limit_s)
        o.pass = false;
    return o;
}

Outcome main2_audits() {
    Outcome o;
    auto a = audit_theorem(Claim::main2_part1, 4);
    auto b = audit_theorem(Claim::main2_part2, 5);
    for (const auto& r : {a, b}) {
        o.detail += " " + audit_line(r) + ";";
        require_no_violations(o, r);
        if (r.hypothesis_models == 0)
            o.pass = false;
    }
    return o;
}

Outcome main3_and_lemmas() {
    Outcome o;
    std::vector<AuditResult> results{audit_theorem(Claim::main3_part1, 4), audit_theorem(Claim::main3_part2, 4)};
    auto clifford = audit_theorem_on(Claim::main3_part2, chain_clifford_semigroups(8), "clifford <= 8");
    clifford.claim += "[clifford<=8]";
    results.push_back(clifford);
    for (std::uint64_t k : {2u, 3u}) {
        ClaimParams params;
        params.k = k;
        auto r = audit_theorem(Claim::lemma31, 4, params);
        r.claim += "[k=" + std::to_string(k) + "]";
        results.push_back(r);
    }
    results.push_back(audit_theorem(Claim::lemma41, 4));
    for (const auto& r : results) {
        o.detail += " " + audit_line(r) + ";";
        require_no_violations(o, r);
    }
    return o;
}

Outcome gmap_certificates() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t certified = 0;
    for (const auto& s : universe(4, [](const Semigroup& s) { return is_cancellative(s); })) {
        if (!powers_commute(s, 2) || !powers_commute(s, 3))
            continue;
        if (!check_g_axioms(s, instantiate_g_from_powers(s, 2, 3)).all())
            o.pass = false;
        ++certified;
    }
    auto search = search_g_maps(symmetric_group(3));
    if (search.maps_checked != 46656 || !search.satisfying.empty())
        o.pass = false;
    const double t = seconds_since(t0);
    if (t >= gmap_limit_s)
        o.pass = false;
    o.detail = "certified=" + std::to_string(certified) + " s3_maps=" + std::to_string(search.maps_checked) +
               " s3_satisfying=" + std::to_string(search.satisfying.size()) + " time=" + fmt_seconds(t) +
               " limit=" + fmt_seconds(gmap_limit_s);
    return o;
}

Outcome counterexamples() {
    Outcome o;
    for (auto ex : {Example::ex22, Example::ex32, Example::ex33, Example::ex43}) {
        auto r = audit_counterexample(ex);
        bool all = r.verdict == Verdict::holds;
        for (const auto& c : r.checks)
            all = all && c.passed;
        o.detail += std::string(" ") + to_string(ex) + "=" + (all ? "confirmed" : "FAILED") + ";";
        o.pass = o.pass && all;
    }
    auto r = audit_counterexample(Example::ex42);
    const std::string expected = "(xy)^3 = x^3 y^3 fails at x=(1,1), y=(1,2): (xy)^3=(21,8) x^3y^3=(31,8)";
    const bool ok = r.verdict == Verdict::hypothesis_never_satisfied && r.hypothesis_witness == expected;
    o.pass = o.pass && ok;
    o.detail += std::string(" ex42=") + to_string(r.verdict) + " witness=" + r.hypothesis_witness.value_or("none");
    return o;
}

const std::vector<std::pair<std::string, proof::ProofScript>>& scripts() {
    static const auto s = proof::bundled_scripts(SEMICOMM_PROOFS_DIR);
    return s;
}

Outcome proof_replay() {
    Outcome o;
    std::size_t failed = 0;
    std::vector<proof::ProofScript> list;
    for (const auto& [name, s] : scripts()) {
        auto v = proof::check_proof(s);
        failed += v.failed_steps();
        if (!v.all_verified()) {
            o.pass = false;
            o.detail += " " + name + " not verified;";
        }
        list.push_back(s);
    }
    if (failed)
        o.pass = false;
    auto fuzz = proof_checks::fuzz_rewrites(list, fuzz_mutations, fuzz_seed);
    const auto escapes = fuzz.escapes();
    if (fuzz.effective() < 100 || !escapes.empty())
        o.pass = false;
    o.detail += " scripts=" + std::to_string(list.size()) + " failed_steps=" + std::to_string(failed) +
                " mutations=" + std::to_string(fuzz.effective()) + " rejected=" +
                std::to_string(fuzz.effective() - escapes.size()) + " neutral_skipped=" + std::to_string(fuzz.neutral);
    for (std::size_t i = 0; i < escapes.size() && i < 3; ++i)
        o.detail += " escape: " + proof_checks::describe(*escapes[i], list) + ";";
    return o;
}

Outcome soundness() {
    Outcome o;
    std::size_t discrepancies = 0, models = 0;
    for (const auto& [name, s] : scripts()) {
        auto v = proof::check_proof(s);
        auto r = proof::audit_soundness(s, v, 4);
        discrepancies += r.discrepancy_count;
        models += r.models;
        if (!r.sound())
            o.detail += " " + name + ": " + r.discrepancies.front() + ";";
    }
    o.pass = discrepancies == 0;
    o.detail += " models=" + std::to_string(models) + " discrepancies=" + std::to_string(discrepancies);
    return o;
}

Outcome emitter_fidelity() {
    Outcome o;
    auto emitted = proof_checks::prover9_blocks(proof::emit_prover9(2, 3, proof::Theory::group));
    auto fixture = proof_checks::fixture_blocks(std::string(SEMICOMM_FIXTURES_DIR) + "/prover9_group_2_3.txt");
    o.pass = !fixture.assumptions.empty() && emitted.assumptions == fixture.assumptions &&
             emitted.goals == fixture.goals;
    o.detail = "assumption_lines=" + std::to_string(emitted.assumptions.size()) + "/" +
               std::to_string(fixture.assumptions.size()) + " goal_lines=" + std::to_string(emitted.goals.size()) +
               "/" + std::to_string(fixture.goals.size());
    return o;
}

Outcome decomposition_audit() {
    Outcome o;
    std::size_t tables = 0, separative = 0, agree = 0;
    for (const auto& s : universe(4)) {
        ++tables;
        if (audit_prop_1_2(s).agree)
            ++agree;
        if (!separativity(s))
            continue;
        ++separative;
        auto d = decompose_semilattice(s);
        for (const auto& c : d.components)
            if (!is_cancellative(c))
                o.pass = false;
        const auto& q = d.meet_table;
        for (std::size_t i = 0; i < q.order(); ++i)
            for (std::size_t j = 0; j < q.order(); ++j)
                if (q.at(i, i) != i || q.at(i, j) != q.at(j, i))
                    o.pass = false;
    }
    const double rate = static_cast<double>(agree) / static_cast<double>(tables);
    if (rate < required_agreement)
        o.pass = false;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * rate);
    o.detail = "tables=" + std::to_string(tables) + " separative=" + std::to_string(separative) +
               " agreement=" + std::to_string(agree) + "/" + std::to_string(tables) + " (" + buf + ")";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"enumeration counts", enumeration_counts},
        {"main1 audit", main1_audit},
        {"main2 audits", main2_audits},
        {"main3 and lemma audits", main3_and_lemmas},
        {"g-map certificates", gmap_certificates},
        {"counterexample audits", counterexamples},
        {"proof replay and fuzz", proof_replay},
        {"soundness cross-audit", soundness},
        {"prover9 emitter fidelity", emitter_fidelity},
        {"decomposition audit", decomposition_audit},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass)
            ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
