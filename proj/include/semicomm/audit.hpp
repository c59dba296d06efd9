#ifndef SEMICOMM_AUDIT_HPP
#define SEMICOMM_AUDIT_HPP

// Brute-force audits of the commutativity theorems over every semigroup of
// small order, and re-verification of the concrete counterexamples.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayley_table.hpp"
#include "classify.hpp"
#include "construct.hpp"
#include "decompose.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "triangular.hpp"

namespace semicomm {

enum class Claim {
    main1,       ///< separative or completely regular + commuting p-th and q-th powers
    main2_part1, ///< separative + per-pair consecutive power endomorphisms
    main2_part2, ///< inverse + global consecutive power endomorphisms
    main3_part1, ///< separative + cube endomorphism + injective cubes
    main3_part2, ///< inverse + cube endomorphism + (x^4 = x => x^2 = x)
    lemma31,     ///< inverse + k-th power endomorphism => Clifford
    lemma41,     ///< cancellative + cube endomorphism => central cubes
    prop11,      ///< cancellative + x^3 = x => commutative group with x^2 = 1
    cor13,       ///< separative + x^3 = x => semilattice of exponent-2 groups
};

enum class Example { ex22, ex32, ex33, ex42, ex43 };

enum class Verdict { holds, violated, hypothesis_never_satisfied };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::violated:
        return "violated";
    case Verdict::hypothesis_never_satisfied:
        return "hypothesis_never_satisfied";
    }
    return "?";
}

inline const char* to_string(Claim c) {
    switch (c) {
    case Claim::main1: return "main1";
    case Claim::main2_part1: return "main2_part1";
    case Claim::main2_part2: return "main2_part2";
    case Claim::main3_part1: return "main3_part1";
    case Claim::main3_part2: return "main3_part2";
    case Claim::lemma31: return "lemma31";
    case Claim::lemma41: return "lemma41";
    case Claim::prop11: return "prop11";
    case Claim::cor13: return "cor13";
    }
    return "?";
}

inline const char* to_string(Example e) {
    switch (e) {
    case Example::ex22: return "ex22";
    case Example::ex32: return "ex32";
    case Example::ex33: return "ex33";
    case Example::ex42: return "ex42";
    case Example::ex43: return "ex43";
    }
    return "?";
}

inline std::optional<Claim> parse_claim(const std::string& s) {
    for (auto c : {Claim::main1, Claim::main2_part1, Claim::main2_part2, Claim::main3_part1,
                   Claim::main3_part2, Claim::lemma31, Claim::lemma41, Claim::prop11, Claim::cor13})
        if (s == to_string(c))
            return c;
    return std::nullopt;
}

inline std::optional<Example> parse_example(const std::string& s) {
    for (auto e : {Example::ex22, Example::ex32, Example::ex33, Example::ex42, Example::ex43})
        if (s == to_string(e))
            return e;
    return std::nullopt;
}

struct ClaimParams {
    std::uint64_t p = 2;
    std::uint64_t q = 3;
    std::uint64_t k = 2;      ///< lemma31 exponent
    std::size_t bound = 8;    ///< exponent bound for main2
};

struct Violation {
    std::optional<CayleyTable> table;
    std::vector<Element> witness;
    std::string description;
};

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditResult {
    std::string claim;
    std::string universe;
    std::uint64_t models_checked = 0;
    std::uint64_t hypothesis_models = 0;
    std::vector<Violation> violations;
    std::vector<PropertyCheck> checks;
    std::vector<std::string> notes;
    /// Set when a hypothesis was evaluated on an example and found false.
    std::optional<std::string> hypothesis_witness;
    Verdict verdict = Verdict::holds;
};

/// Outcome of one claim on one model.
struct ModelOutcome {
    bool hypothesis = false;
    std::optional<Violation> violation;
};

namespace detail {

inline std::string pair_text(const CayleyTable& s, ElementPair w) {
    return "x=" + s.name(w.first) + ", y=" + s.name(w.second);
}

inline std::optional<Violation> require_commutative(const Semigroup& s) {
    auto c = commutativity(s);
    if (c)
        return std::nullopt;
    return Violation{s.table(), {c.counterexample->first, c.counterexample->second},
                     "not commutative: " + pair_text(s, *c.counterexample)};
}

} // namespace detail

/// x y^2 x = y x^2 y, the form the cube-centrality derivation needs.
inline PairCheck corrected_engel_identity(const Semigroup& s) {
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        const std::size_t yy = s.at(y, y), xx = s.at(x, x);
        return s.at(s.at(x, yy), x) == s.at(s.at(y, xx), y);
    });
}

/// x y^2 x = y x^2 x, as the identity is printed in the source text.
inline PairCheck printed_engel_identity(const Semigroup& s) {
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        const std::size_t yy = s.at(y, y), xx = s.at(x, x);
        return s.at(s.at(x, yy), x) == s.at(s.at(y, xx), x);
    });
}

/// x^3 y = y x^3.
inline PairCheck cubes_central(const Semigroup& s) {
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        const std::size_t c = power(s, Element(x), 3).index;
        return s.at(c, y) == s.at(y, c);
    });
}

/// The identities used on the way to xx' = x'x for inverse semigroups with
/// (xy)^k = x^k y^k. Returns the first failure.
inline std::optional<Violation> check_clifford_steps(const Semigroup& s, std::uint64_t k) {
    auto inv = inverse_map(s);
    if (!inv)
        throw ContractViolation("not an inverse semigroup");
    for (std::size_t x = 0; x < s.order(); ++x) {
        const Element ex(x), xi = (*inv)[x];
        auto pw = [&](Element e, std::uint64_t j) { return power(s, e, j); };
        auto fail = [&](const std::string& what) {
            return Violation{s.table(), {ex}, what + " fails at x=" + s.name(ex)};
        };
        if (s(pw(xi, k), pw(ex, k)) != s(xi, ex))
            return fail("(x')^k x^k = x'x");
        if (k >= 2 && s(pw(xi, k - 1), pw(ex, k)) != ex)
            return fail("(x')^(k-1) x^k = x");
        if (s(s(xi, ex), ex) != ex)
            return fail("x'xx = x");
        if (s(s(ex, xi), xi) != xi)
            return fail("xx'x' = x'");
    }
    return std::nullopt;
}

/// Evaluates the hypothesis of `claim` on `s` and, when it holds, the conclusion.
inline ModelOutcome evaluate_claim(Claim claim, const Semigroup& s, const ClaimParams& params) {
    ModelOutcome out;
    switch (claim) {
    case Claim::main1: {
        if (std::gcd(params.p, params.q) != 1)
            throw InputError("main1 needs coprime p and q");
        const bool cls = separativity(s).holds() || check_regularity(s).completely_regular;
        out.hypothesis = cls && powers_commute(s, params.p).holds() && powers_commute(s, params.q).holds();
        if (out.hypothesis)
            out.violation = detail::require_commutative(s);
        break;
    }
    case Claim::main2_part1:
        out.hypothesis = separativity(s).holds() &&
                         consecutive_powers(s, params.bound, ConsecutiveMode::per_pair).holds;
        if (out.hypothesis)
            out.violation = detail::require_commutative(s);
        break;
    case Claim::main2_part2:
        out.hypothesis = check_regularity(s).inverse &&
                         consecutive_powers(s, params.bound, ConsecutiveMode::global).holds;
        if (out.hypothesis)
            out.violation = detail::require_commutative(s);
        break;
    case Claim::main3_part1:
        out.hypothesis = power_endomorphism(s, 3).holds() && separativity(s).holds() &&
                         check_cube_conditions(s).cube_injective;
        if (out.hypothesis)
            out.violation = detail::require_commutative(s);
        break;
    case Claim::main3_part2:
        out.hypothesis = power_endomorphism(s, 3).holds() && check_regularity(s).inverse &&
                         check_cube_conditions(s).four_to_two;
        if (out.hypothesis)
            out.violation = detail::require_commutative(s);
        break;
    case Claim::lemma31: {
        if (params.k < 2)
            throw InputError("lemma31 needs k >= 2");
        out.hypothesis = check_regularity(s).inverse && power_endomorphism(s, params.k).holds();
        if (!out.hypothesis)
            break;
        if (!check_regularity(s).clifford)
            out.violation = Violation{s.table(), {}, "not a Clifford semigroup"};
        else
            out.violation = check_clifford_steps(s, params.k);
        break;
    }
    case Claim::lemma41:
        out.hypothesis = is_cancellative(s) && power_endomorphism(s, 3).holds();
        if (!out.hypothesis)
            break;
        if (auto c = cubes_central(s); !c)
            out.violation = Violation{s.table(), {c.counterexample->first, c.counterexample->second},
                                      "x^3 y = y x^3 fails at " + detail::pair_text(s, *c.counterexample)};
        else if (auto e = corrected_engel_identity(s); !e)
            out.violation = Violation{s.table(), {e.counterexample->first, e.counterexample->second},
                                      "x y^2 x = y x^2 y fails at " + detail::pair_text(s, *e.counterexample)};
        break;
    case Claim::prop11: {
        out.hypothesis = is_cancellative(s) && check_cube_conditions(s).x3_eq_x;
        if (!out.hypothesis)
            break;
        out.violation = detail::require_commutative(s);
        if (out.violation)
            break;
        auto e = identity_element(s);
        if (!e) {
            out.violation = Violation{s.table(), {}, "no identity element"};
            break;
        }
        for (std::size_t x = 0; x < s.order(); ++x)
            if (s.at(x, x) != e->index) {
                out.violation = Violation{s.table(), {Element(x)}, "x^2 != 1 at x=" + s.name(x)};
                break;
            }
        break;
    }
    case Claim::cor13: {
        out.hypothesis = separativity(s).holds() && check_cube_conditions(s).x3_eq_x;
        if (!out.hypothesis)
            break;
        out.violation = detail::require_commutative(s);
        if (out.violation)
            break;
        auto d = decompose_semilattice(s);
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            const auto& c = d.components[i];
            auto e = identity_element(c);
            bool ok = e && check_regularity(c).group;
            for (std::size_t x = 0; ok && x < c.order(); ++x)
                ok = c.at(x, x) == e->index;
            if (!ok) {
                out.violation = Violation{s.table(), d.members[i],
                                          "component " + std::to_string(d.partition.class_ids()[i]) +
                                              " is not a group of exponent <= 2"};
                break;
            }
        }
        break;
    }
    }
    return out;
}

namespace detail {

inline void finish(AuditResult& r) {
    if (!r.violations.empty())
        r.verdict = Verdict::violated;
    else if (r.hypothesis_models == 0)
        r.verdict = Verdict::hypothesis_never_satisfied;
    else
        r.verdict = Verdict::holds;
}

inline std::string params_text(Claim claim, const ClaimParams& p) {
    switch (claim) {
    case Claim::main1:
        return "p=" + std::to_string(p.p) + " q=" + std::to_string(p.q);
    case Claim::main2_part1:
    case Claim::main2_part2:
        return "bound=" + std::to_string(p.bound);
    case Claim::lemma31:
        return "k=" + std::to_string(p.k);
    default:
        return "";
    }
}

/// Enumeration filters that only discard tables failing a necessary part of
/// the hypothesis.
inline std::function<bool(const Semigroup&)> prefilter(Claim claim) {
    switch (claim) {
    case Claim::main2_part2:
    case Claim::main3_part2:
    case Claim::lemma31:
        return [](const Semigroup& s) { return check_regularity(s).inverse; };
    case Claim::lemma41:
    case Claim::prop11:
        return [](const Semigroup& s) { return is_cancellative(s); };
    case Claim::main2_part1:
    case Claim::main3_part1:
    case Claim::cor13:
        return [](const Semigroup& s) { return separativity(s).holds(); };
    default:
        return {};
    }
}

inline const char* prefilter_name(Claim claim) {
    switch (claim) {
    case Claim::main2_part2:
    case Claim::main3_part2:
    case Claim::lemma31:
        return "inverse";
    case Claim::lemma41:
    case Claim::prop11:
        return "cancellative";
    case Claim::main2_part1:
    case Claim::main3_part1:
    case Claim::cor13:
        return "separative";
    default:
        return "none";
    }
}

} // namespace detail

/// Audits `claim` over every associative table of order 1..max_order.
/// Tables are prefiltered by the class part of the hypothesis;
/// models_checked counts the tables that survive the prefilter.
inline AuditResult audit_theorem(Claim claim, std::size_t max_order, const ClaimParams& params = {},
                                 std::size_t jobs = 1) {
    if (max_order == 0 || max_order > 5)
        throw InputError("max order must be in [1, 5]");
    AuditResult r;
    r.claim = to_string(claim);
    r.universe = "labeled associative tables of order 1.." + std::to_string(max_order) +
                 ", prefilter=" + detail::prefilter_name(claim);
    auto extra = detail::params_text(claim, params);
    if (!extra.empty())
        r.universe += ", " + extra;

    struct Acc {
        std::uint64_t models = 0;
        std::uint64_t hyp = 0;
        std::vector<Violation> violations;
    };
    for (std::size_t n = 1; n <= max_order; ++n) {
        EnumerationOptions opt;
        opt.order = n;
        opt.filter = detail::prefilter(claim);
        auto accs = enumerate_partitioned<Acc>(opt, jobs, [&](Acc& acc, const Semigroup& s) {
            ++acc.models;
            auto o = evaluate_claim(claim, s, params);
            if (o.hypothesis)
                ++acc.hyp;
            if (o.violation)
                acc.violations.push_back(std::move(*o.violation));
        });
        std::vector<Violation> merged;
        for (auto& a : accs) {
            r.models_checked += a.models;
            r.hypothesis_models += a.hyp;
            for (auto& v : a.violations)
                merged.push_back(std::move(v));
        }
        std::sort(merged.begin(), merged.end(), [](const Violation& a, const Violation& b) {
            return lex_less(*a.table, *b.table);
        });
        for (auto& v : merged)
            r.violations.push_back(std::move(v));
    }
    detail::finish(r);
    return r;
}

/// Audits `claim` over an explicit list of models.
inline AuditResult audit_theorem_on(Claim claim, const std::vector<Semigroup>& models,
                                    const std::string& universe, const ClaimParams& params = {}) {
    AuditResult r;
    r.claim = to_string(claim);
    r.universe = universe;
    for (const auto& s : models) {
        ++r.models_checked;
        auto o = evaluate_claim(claim, s, params);
        if (o.hypothesis)
            ++r.hypothesis_models;
        if (o.violation)
            r.violations.push_back(std::move(*o.violation));
    }
    detail::finish(r);
    return r;
}

/// Small groups used to build Clifford semigroups: cyclic groups of order
/// 1..8, the Klein group, S3, Z2 x Z4 and Z2^3.
inline std::vector<Semigroup> small_groups(std::size_t max_order) {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 8); ++n)
        out.push_back(cyclic_group(n));
    if (max_order >= 4)
        out.push_back(klein_group());
    if (max_order >= 6)
        out.push_back(symmetric_group(3));
    if (max_order >= 8) {
        out.push_back(Semigroup(direct_product(cyclic_group(2), cyclic_group(4))));
        out.push_back(Semigroup(direct_product(klein_group(), cyclic_group(2))));
    }
    return out;
}

/// Every strong semilattice of groups over a chain, drawn from
/// small_groups, with all connecting homomorphisms, of total order at most
/// `max_order`.
inline std::vector<Semigroup> chain_clifford_semigroups(std::size_t max_order) {
    auto groups = small_groups(max_order);
    std::vector<std::vector<std::vector<Homomorphism>>> homs(groups.size(),
                                                             std::vector<std::vector<Homomorphism>>(groups.size()));
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (groups[i].order() + groups[j].order() <= max_order)
                homs[i][j] = all_homomorphisms(groups[i], groups[j]);

    std::vector<Semigroup> out;
    std::vector<std::size_t> chain;   // group ids, bottom first
    std::vector<Homomorphism> links;  // links[i] : chain[i+1] -> chain[i]
    auto rec = [&](auto&& self, std::size_t total) -> void {
        if (!chain.empty()) {
            std::vector<Semigroup> gs;
            for (auto id : chain)
                gs.push_back(groups[id]);
            out.push_back(strong_semilattice_of_groups(gs, links));
        }
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (total + groups[g].order() > max_order)
                continue;
            if (chain.empty()) {
                chain.push_back(g);
                self(self, total + groups[g].order());
                chain.pop_back();
                continue;
            }
            for (const auto& h : homs[g][chain.back()]) {
                chain.push_back(g);
                links.push_back(h);
                self(self, total + groups[g].order());
                links.pop_back();
                chain.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

namespace detail {

inline void add_check(AuditResult& r, std::string name, bool passed, std::string detail = "") {
    if (!passed)
        r.violations.push_back(Violation{std::nullopt, {}, name + (detail.empty() ? "" : ": " + detail)});
    r.checks.push_back(PropertyCheck{std::move(name), passed, std::move(detail)});
}

inline bool is_idempotent(const CayleyTable& s, Element x) { return s(x, x) == x; }

} // namespace detail

/// Seed of the generator behind the triangular-semigroup samples.
inline constexpr std::uint64_t triangular_sample_seed = 0x5E3A'7C01'2024'0042ULL;

/// Deterministic sample of triangular elements with entries in [1, max_entry].
inline std::vector<TriElement> triangular_sample(std::size_t count, std::uint64_t max_entry,
                                                 std::uint64_t seed = triangular_sample_seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, max_entry);
    std::vector<TriElement> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BigInt a = dist(gen);
        BigInt b = dist(gen);
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

/// Exponent bound for "for all k" checks on fixed examples.
inline constexpr std::uint64_t example_exponent_bound = 6;

inline AuditResult audit_counterexample(Example example) {
    using detail::add_check;
    AuditResult r;
    r.claim = to_string(example);
    const std::uint64_t kmax = example_exponent_bound;
    switch (example) {
    case Example::ex22: {
        auto s = brandt_b2();
        r.universe = "Brandt semigroup B2";
        auto reg = check_regularity(s);
        add_check(r, "inverse semigroup", reg.inverse);
        for (std::uint64_t p = 2; p <= kmax; ++p) {
            bool all_idem = true;
            for (std::size_t x = 0; x < s.order(); ++x)
                all_idem &= detail::is_idempotent(s, power(s, Element(x), p));
            add_check(r, "x^" + std::to_string(p) + " idempotent for all x", all_idem);
            add_check(r, "powers_commute p=" + std::to_string(p), powers_commute(s, p).holds());
        }
        auto comm = commutativity(s);
        add_check(r, "not commutative", !comm.holds(),
                  comm.holds() ? "" : "witness " + detail::pair_text(s, *comm.counterexample));
        add_check(r, "not completely regular", !reg.completely_regular);
        add_check(r, "not separative", !separativity(s).holds());
        const auto a = *s.find("a");
        if (!detail::is_idempotent(s, a))
            r.notes.push_back("p=1 read literally fails: a is not idempotent (a*a = " +
                              s.name(s(a, a)) + "); idempotent powers checked for 2 <= p <= " +
                              std::to_string(kmax));
        r.models_checked = 1;
        r.hypothesis_models = 1;
        break;
    }
    case Example::ex32: {
        auto s = brandt_b2();
        r.universe = "Brandt semigroup B2";
        const Element zero = *s.find("0");
        bool zero_pairs = true;
        for (std::size_t b = 0; b < s.order(); ++b)
            for (std::uint64_t k = 1; k <= kmax; ++k) {
                const Element eb(b);
                zero_pairs &= power(s, s(zero, eb), k) == s(power(s, zero, k), power(s, eb, k));
                zero_pairs &= power(s, s(eb, zero), k) == s(power(s, eb, k), power(s, zero, k));
            }
        add_check(r, "(0b)^k = 0^k b^k and (b0)^k = b^k 0^k for all b, 1 <= k <= " + std::to_string(kmax),
                  zero_pairs);
        auto reg = check_regularity(s);
        add_check(r, "inverse semigroup", reg.inverse);
        add_check(r, "not Clifford", !reg.clifford);
        auto inv = inverse_map(s);
        std::optional<Element> noncommuting;
        for (std::size_t b = 0; inv && b < s.order() && !noncommuting; ++b)
            if (s(Element(b), (*inv)[b]) != s((*inv)[b], Element(b)))
                noncommuting = Element(b);
        add_check(r, "some b with bb' != b'b", noncommuting.has_value(),
                  noncommuting ? "b=" + s.name(*noncommuting) : "");
        auto pp = consecutive_powers(s, 8, ConsecutiveMode::per_pair);
        if (!pp.holds)
            r.notes.push_back("the per-pair consecutive-exponent condition fails on all of B2 at " +
                              detail::pair_text(s, *pp.failing_pair) + " (bound 8)");
        r.models_checked = 1;
        r.hypothesis_models = 1;
        break;
    }
    case Example::ex33: {
        auto s = left_zero(2);
        r.universe = "2-element left zero semigroup";
        bool endo = true;
        for (std::uint64_t k = 1; k <= kmax; ++k)
            endo &= power_endomorphism(s, k).holds();
        add_check(r, "(xy)^k = x^k y^k for 1 <= k <= " + std::to_string(kmax), endo);
        auto reg = check_regularity(s);
        add_check(r, "regular", reg.regular);
        add_check(r, "completely regular", reg.completely_regular);
        add_check(r, "not commutative", !commutativity(s).holds());
        r.models_checked = 1;
        r.hypothesis_models = 1;
        break;
    }
    case Example::ex43: {
        auto s = left_zero(2);
        r.universe = "2-element left zero semigroup";
        bool idem = true;
        for (std::size_t x = 0; x < s.order(); ++x)
            idem &= detail::is_idempotent(s, Element(x));
        add_check(r, "every element idempotent", idem);
        auto cube = check_cube_conditions(s);
        add_check(r, "x^3 = y^3 => x = y", cube.cube_injective);
        add_check(r, "x^4 = x => x^2 = x", cube.four_to_two);
        add_check(r, "(xy)^3 = x^3 y^3", power_endomorphism(s, 3).holds());
        add_check(r, "not commutative", !commutativity(s).holds());
        r.models_checked = 1;
        r.hypothesis_models = 1;
        break;
    }
    case Example::ex42: {
        r.universe = "upper triangular [[1,a],[0,b]], a,b >= 1 (deterministic samples)";
        constexpr std::size_t samples = 10000;
        auto xs = triangular_sample(samples, 1000, triangular_sample_seed);
        auto ys = triangular_sample(samples, 1000, triangular_sample_seed + 1);
        auto zs = triangular_sample(samples, 1000, triangular_sample_seed + 2);
        bool cancellative = true;
        for (std::size_t i = 0; i < samples; ++i) {
            const auto& x = xs[i];
            const auto& y = ys[i];
            const auto& z = zs[i];
            cancellative &= (tri_mul(x, y) == tri_mul(x, z)) == (y == z);
            cancellative &= (tri_mul(y, x) == tri_mul(z, x)) == (y == z);
            cancellative &= tri_left_divide(x, tri_mul(x, y)) == std::optional<TriElement>(y);
            cancellative &= tri_right_divide(tri_mul(y, x), x) == std::optional<TriElement>(y);
        }
        add_check(r, "cancellative on " + std::to_string(samples) + " sampled triples", cancellative);
        bool no_idem = true, no_fourth = true;
        for (int a = 1; a <= 64; ++a)
            for (int b = 1; b <= 64; ++b) {
                TriElement x(a, b);
                no_idem &= !(tri_mul(x, x) == x);
                no_fourth &= !(tri_power(x, 4) == x);
            }
        add_check(r, "no idempotent with entries <= 64", no_idem);
        add_check(r, "no x^4 = x with entries <= 64", no_fourth);

        // Scan small elements in (a, b) order for the first noncommuting pair
        // and the first failure of (xy)^3 = x^3 y^3.
        std::vector<TriElement> small;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                small.emplace_back(a, b);
        std::optional<std::pair<TriElement, TriElement>> noncomm, cube_fail;
        for (const auto& x : small)
            for (const auto& y : small) {
                if (!noncomm && !(tri_mul(x, y) == tri_mul(y, x)))
                    noncomm.emplace(x, y);
                if (!cube_fail && !(tri_power(tri_mul(x, y), 3) == tri_mul(tri_power(x, 3), tri_power(y, 3))))
                    cube_fail.emplace(x, y);
            }
        add_check(r, "not commutative", noncomm.has_value(),
                  noncomm ? "witness x=" + noncomm->first.str() + ", y=" + noncomm->second.str() : "");
        r.models_checked = 1;
        if (cube_fail) {
            const auto& [x, y] = *cube_fail;
            auto lhs = tri_power(tri_mul(x, y), 3);
            auto rhs = tri_mul(tri_power(x, 3), tri_power(y, 3));
            r.hypothesis_witness = "(xy)^3 = x^3 y^3 fails at x=" + x.str() + ", y=" + y.str() +
                                   ": (xy)^3=" + lhs.str() + " x^3y^3=" + rhs.str();
            r.notes.push_back(*r.hypothesis_witness);
            r.hypothesis_models = 0;
        } else {
            r.hypothesis_models = 1;
        }
        break;
    }
    }
    detail::finish(r);
    return r;
}

} // namespace semicomm

#endif
