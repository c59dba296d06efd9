#ifndef SEMICOMM_CLASSIFY_HPP
#define SEMICOMM_CLASSIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cayley_table.hpp"
#include "error.hpp"

namespace semicomm {

/// Truth values of every class predicate for one finite semigroup.
struct ClassificationReport {
    bool commutative = false;
    bool cancellative = false;
    bool separative = false;
    bool regular = false;
    bool inverse = false;
    bool completely_regular = false;
    bool clifford = false;
    bool group = false;
    bool has_identity = false;
    std::optional<Element> identity;
    std::size_t idempotent_count = 0;
};

/// Result of an all-pairs identity check. Converts to true when the identity
/// holds; otherwise `counterexample` is the lexicographically smallest
/// failing pair.
struct PairCheck {
    std::optional<ElementPair> counterexample;

    explicit operator bool() const noexcept { return !counterexample; }
    bool holds() const noexcept { return !counterexample; }
};

namespace detail {

template <class Pred>
PairCheck first_failing_pair(std::size_t n, Pred holds) {
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!holds(x, y))
                return PairCheck{ElementPair{Element(x), Element(y)}};
    return PairCheck{};
}

/// powers[x * (bound + 1) + k] = x^k for 1 <= k <= bound.
inline std::vector<std::size_t> power_table(const CayleyTable& s, std::size_t bound) {
    const std::size_t n = s.order();
    std::vector<std::size_t> p(n * (bound + 1), 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (bound == 0)
            break;
        p[x * (bound + 1) + 1] = x;
        for (std::size_t k = 2; k <= bound; ++k)
            p[x * (bound + 1) + k] = s.at(p[x * (bound + 1) + k - 1], x);
    }
    return p;
}

inline bool is_permutation(std::span<const CayleyTable::cell_type> values, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto v : values) {
        if (seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

} // namespace detail

inline PairCheck commutativity(const Semigroup& s) {
    return detail::first_failing_pair(s.order(),
                                      [&](std::size_t x, std::size_t y) { return s.at(x, y) == s.at(y, x); });
}

inline bool is_cancellative(const Semigroup& s) {
    const std::size_t n = s.order();
    for (std::size_t x = 0; x < n; ++x)
        if (!detail::is_permutation(s.row(x), n))
            return false;
    std::vector<CayleyTable::cell_type> column(n);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x)
            column[x] = static_cast<CayleyTable::cell_type>(s.at(x, y));
        if (!detail::is_permutation(column, n))
            return false;
    }
    return true;
}

/// First pair violating either separativity quasi-identity:
/// (xy = xx and yx = yy) => x = y, and (xy = yy and yx = xx) => x = y.
inline PairCheck separativity(const Semigroup& s) {
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        if (x == y)
            return true;
        const bool first = s.at(x, y) == s.at(x, x) && s.at(y, x) == s.at(y, y);
        const bool second = s.at(x, y) == s.at(y, y) && s.at(y, x) == s.at(x, x);
        return !first && !second;
    });
}

inline std::optional<Element> identity_element(const CayleyTable& s) {
    const std::size_t n = s.order();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = s.at(e, x) == x && s.at(x, e) == x;
        if (ok)
            return Element(e);
    }
    return std::nullopt;
}

/// Fills commutative, cancellative, separative, has_identity, identity and
/// idempotent_count.
inline ClassificationReport check_basic(const Semigroup& s) {
    ClassificationReport r;
    r.commutative = commutativity(s).holds();
    r.cancellative = is_cancellative(s);
    r.separative = separativity(s).holds();
    r.identity = identity_element(s);
    r.has_identity = r.identity.has_value();
    r.idempotent_count = idempotents(s).size();
    return r;
}

/// All b with aba = a and bab = b.
inline std::vector<Element> inverses_of(const Semigroup& s, Element a) {
    require_element(s, a);
    std::vector<Element> out;
    const std::size_t x = a.index;
    for (std::size_t b = 0; b < s.order(); ++b)
        if (s.at(s.at(x, b), x) == x && s.at(s.at(b, x), b) == b)
            out.emplace_back(b);
    return out;
}

inline bool idempotents_commute(const Semigroup& s) {
    auto e = idempotents(s);
    for (auto a : e)
        for (auto b : e)
            if (s(a, b) != s(b, a))
                return false;
    return true;
}

/// The unique inverse of each element, if `s` is an inverse semigroup.
inline std::optional<std::vector<Element>> inverse_map(const Semigroup& s) {
    std::vector<Element> out;
    out.reserve(s.order());
    for (std::size_t a = 0; a < s.order(); ++a) {
        auto inv = inverses_of(s, Element(a));
        if (inv.size() != 1)
            return std::nullopt;
        out.push_back(inv.front());
    }
    return out;
}

/// Fills regular, inverse, completely_regular, clifford and group. The
/// inverse-semigroup test is run two ways (unique inverses; regular with
/// commuting idempotents) and the answers must agree.
inline ClassificationReport check_regularity(const Semigroup& s) {
    ClassificationReport r;
    const std::size_t n = s.order();
    bool regular = true;
    bool unique = true;
    bool completely_regular = true;
    for (std::size_t a = 0; a < n; ++a) {
        auto inv = inverses_of(s, Element(a));
        if (inv.empty())
            regular = false;
        if (inv.size() != 1)
            unique = false;
        bool commuting = false;
        for (auto b : inv)
            if (s.at(a, b.index) == s.at(b.index, a)) {
                commuting = true;
                break;
            }
        if (!commuting)
            completely_regular = false;
    }
    const bool by_idempotents = regular && idempotents_commute(s);
    if (unique != by_idempotents)
        throw InvariantFailure("inverse-semigroup criteria disagree: unique inverses = " +
                               std::string(unique ? "true" : "false") +
                               ", regular with commuting idempotents = " +
                               std::string(by_idempotents ? "true" : "false"));
    r.regular = regular;
    r.inverse = unique;
    r.completely_regular = completely_regular;
    r.clifford = unique && completely_regular;

    auto e = identity_element(s);
    r.has_identity = e.has_value();
    r.identity = e;
    if (e) {
        bool all_units = true;
        for (std::size_t x = 0; x < n && all_units; ++x) {
            bool unit = false;
            for (std::size_t y = 0; y < n && !unit; ++y)
                unit = s.at(x, y) == e->index && s.at(y, x) == e->index;
            all_units = unit;
        }
        r.group = all_units;
    }
    return r;
}

/// Full report; checks the class-implication lattice before returning.
inline ClassificationReport classify(const Semigroup& s) {
    ClassificationReport r = check_basic(s);
    ClassificationReport reg = check_regularity(s);
    r.regular = reg.regular;
    r.inverse = reg.inverse;
    r.completely_regular = reg.completely_regular;
    r.clifford = reg.clifford;
    r.group = reg.group;
    auto implies = [](bool a, bool b) { return !a || b; };
    if (!implies(r.group, r.cancellative) || !implies(r.cancellative, r.separative) ||
        r.clifford != (r.completely_regular && r.inverse) || !implies(r.clifford, r.separative) ||
        !implies(r.inverse, r.regular))
        throw InvariantFailure("classification violates the class-implication lattice");
    return r;
}

/// x^p y^p = y^p x^p for all x, y.
inline PairCheck powers_commute(const Semigroup& s, std::uint64_t p) {
    if (p == 0)
        throw InputError("exponent must be positive");
    std::vector<std::size_t> pw(s.order());
    for (std::size_t x = 0; x < s.order(); ++x)
        pw[x] = power(s, Element(x), p).index;
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        return s.at(pw[x], pw[y]) == s.at(pw[y], pw[x]);
    });
}

/// (xy)^k = x^k y^k for all x, y.
inline PairCheck power_endomorphism(const Semigroup& s, std::uint64_t k) {
    if (k == 0)
        throw InputError("exponent must be positive");
    std::vector<std::size_t> pw(s.order());
    for (std::size_t x = 0; x < s.order(); ++x)
        pw[x] = power(s, Element(x), k).index;
    return detail::first_failing_pair(s.order(), [&](std::size_t x, std::size_t y) {
        return pw[s.at(x, y)] == s.at(pw[x], pw[y]);
    });
}

struct CubeConditions {
    bool cube_injective = false; ///< x^3 = y^3 => x = y
    bool four_to_two = false;    ///< x^4 = x => x^2 = x
    bool x3_eq_x = false;        ///< x^3 = x
};

inline CubeConditions check_cube_conditions(const Semigroup& s) {
    const std::size_t n = s.order();
    auto p = detail::power_table(s, 4);
    auto pw = [&](std::size_t x, std::size_t k) { return p[x * 5 + k]; };
    CubeConditions c;
    c.cube_injective = true;
    for (std::size_t x = 0; x < n && c.cube_injective; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (pw(x, 3) == pw(y, 3)) {
                c.cube_injective = false;
                break;
            }
    c.four_to_two = true;
    c.x3_eq_x = true;
    for (std::size_t x = 0; x < n; ++x) {
        if (pw(x, 4) == x && pw(x, 2) != x)
            c.four_to_two = false;
        if (pw(x, 3) != x)
            c.x3_eq_x = false;
    }
    if (c.cube_injective && !c.four_to_two)
        throw InvariantFailure("cube-injective table violates x^4 = x => x^2 = x");
    return c;
}

enum class ConsecutiveMode { global, per_pair };

/// Outcome of the "three consecutive exponents" test. A triple is named by
/// its first exponent i (covering i, i+1, i+2). Exponent 0 is the empty
/// product and imposes nothing, as does exponent 1.
struct ConsecutivePowersReport {
    bool holds = false;
    /// Global mode: starts i whose three exponents hold for every pair.
    std::vector<std::size_t> global_starts;
    /// Per-pair mode: the satisfying starts for each checked pair.
    std::vector<std::pair<ElementPair, std::vector<std::size_t>>> per_pair;
    /// Per-pair mode: first pair with no satisfying triple.
    std::optional<ElementPair> failing_pair;
};

namespace detail {

// ok[k] tells whether (xy)^k = x^k y^k holds for exponent k (0 <= k <= bound).
inline std::vector<std::size_t> satisfying_starts(const std::vector<bool>& ok, std::size_t bound) {
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i + 2 <= bound; ++i)
        if (ok[i] && ok[i + 1] && ok[i + 2])
            starts.push_back(i);
    return starts;
}

} // namespace detail

/// `pair_filter`, when given, restricts which pairs are examined.
template <class PairFilter = std::nullptr_t>
ConsecutivePowersReport consecutive_powers(const Semigroup& s, std::size_t bound,
                                           ConsecutiveMode mode, PairFilter pair_filter = nullptr) {
    if (bound < 3)
        throw InputError("exponent bound must be at least 3");
    const std::size_t n = s.order();
    auto p = detail::power_table(s, bound);
    auto pw = [&](std::size_t x, std::size_t k) { return p[x * (bound + 1) + k]; };
    auto exponent_holds = [&](std::size_t x, std::size_t y, std::size_t k) {
        if (k == 0)
            return true;
        return pw(s.at(x, y), k) == s.at(pw(x, k), pw(y, k));
    };
    auto selected = [&](std::size_t x, std::size_t y) {
        if constexpr (std::is_same_v<PairFilter, std::nullptr_t>)
            return true;
        else
            return static_cast<bool>(pair_filter(Element(x), Element(y)));
    };

    ConsecutivePowersReport r;
    if (mode == ConsecutiveMode::global) {
        std::vector<bool> ok(bound + 1, true);
        for (std::size_t k = 0; k <= bound; ++k)
            for (std::size_t x = 0; x < n && ok[k]; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (selected(x, y) && !exponent_holds(x, y, k)) {
                        ok[k] = false;
                        break;
                    }
        r.global_starts = detail::satisfying_starts(ok, bound);
        r.holds = !r.global_starts.empty();
        return r;
    }
    r.holds = true;
    std::vector<bool> ok(bound + 1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!selected(x, y))
                continue;
            for (std::size_t k = 0; k <= bound; ++k)
                ok[k] = exponent_holds(x, y, k);
            auto starts = detail::satisfying_starts(ok, bound);
            if (starts.empty() && !r.failing_pair) {
                r.holds = false;
                r.failing_pair = ElementPair{Element(x), Element(y)};
            }
            r.per_pair.emplace_back(ElementPair{Element(x), Element(y)}, std::move(starts));
        }
    return r;
}

/// Stable key=value rendering, one predicate per line.
inline std::string render_report(const ClassificationReport& r, const CayleyTable& s) {
    std::ostringstream out;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "order=" << s.order() << '\n'
        << "commutative=" << b(r.commutative) << '\n'
        << "cancellative=" << b(r.cancellative) << '\n'
        << "separative=" << b(r.separative) << '\n'
        << "regular=" << b(r.regular) << '\n'
        << "inverse=" << b(r.inverse) << '\n'
        << "completely_regular=" << b(r.completely_regular) << '\n'
        << "clifford=" << b(r.clifford) << '\n'
        << "group=" << b(r.group) << '\n'
        << "has_identity=" << b(r.has_identity) << '\n'
        << "identity=" << (r.identity ? s.name(*r.identity) : std::string("none")) << '\n'
        << "idempotent_count=" << r.idempotent_count << '\n';
    return out.str();
}

} // namespace semicomm

#endif
