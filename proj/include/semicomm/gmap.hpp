#ifndef SEMICOMM_GMAP_HPP
#define SEMICOMM_GMAP_HPP

// Bezout certificates and the maps g : S -> S behind the commuting-powers
// theorem. For coprime p, q pick r, s with pr + qs = 1 and qs < 0; then
// g(x) = x^(-qs) satisfies
//   (a) x g(x) = g(x) x
//   (b) g(x) g(y) = g(y) g(x)
//   (c) x g(x) y g(y) = y g(y) x g(x)
// whenever p-th and q-th powers commute, and in a cancellative semigroup
// (a)-(c) force commutativity.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cayley_table.hpp"
#include "classify.hpp"
#include "error.hpp"

namespace semicomm {

struct BezoutCertificate {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;

    /// The exponent of g, i.e. -q*s (> 0).
    std::int64_t g_exponent() const noexcept { return -q * s; }

    friend bool operator==(const BezoutCertificate&, const BezoutCertificate&) = default;
};

/// Extended Euclid, normalized to the solution with s < 0 of least |s|.
inline BezoutCertificate bezout(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0)
        throw InputError("bezout needs positive integers");
    if (p > (std::int64_t{1} << 30) || q > (std::int64_t{1} << 30))
        throw InputError("bezout arguments too large");
    if (std::gcd(p, q) != 1)
        throw InputError("bezout needs coprime integers, gcd(" + std::to_string(p) + "," +
                         std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
    // invariant: old_r = p*old_x + q*old_y
    std::int64_t old_r = p, r = q, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_x - quot * x;
        old_x = x;
        x = tmp;
        tmp = old_y - quot * y;
        old_y = y;
        y = tmp;
    }
    // p*old_x + q*old_y = 1; the general solution shifts s by multiples of p.
    std::int64_t s = old_y % p;
    if (s >= 0)
        s -= p;
    const std::int64_t rr = (1 - q * s) / p;
    BezoutCertificate cert{p, q, rr, s};
    if (p * cert.r + q * cert.s != 1 || q * cert.s >= 0 || cert.s <= -p - 1 || cert.r <= 0)
        throw InvariantFailure("bad Bezout certificate");
    return cert;
}

using ElementMap = std::vector<Element>;

struct GAxioms {
    bool a = false;
    bool b = false;
    bool c = false;

    bool all() const noexcept { return a && b && c; }
};

inline GAxioms check_g_axioms(const Semigroup& s, const ElementMap& g) {
    const std::size_t n = s.order();
    if (g.size() != n)
        throw InputError("map must assign an image to every element");
    for (auto v : g)
        require_element(s, v);
    GAxioms r{true, true, true};
    std::vector<std::size_t> xg(n);
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t gx = g[x].index;
        xg[x] = s.at(x, gx);
        if (xg[x] != s.at(gx, x))
            r.a = false;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (r.b && s.at(g[x].index, g[y].index) != s.at(g[y].index, g[x].index))
                r.b = false;
            if (r.c && s.at(xg[x], xg[y]) != s.at(xg[y], xg[x]))
                r.c = false;
        }
    return r;
}

/// g(x) = x^(-qs) from bezout(p, q). Requires that p-th and q-th powers
/// commute; the returned map is verified against (a), (b), (c).
inline ElementMap instantiate_g_from_powers(const Semigroup& s, std::int64_t p, std::int64_t q) {
    const auto cert = bezout(p, q);
    for (auto e : {p, q}) {
        auto check = powers_commute(s, static_cast<std::uint64_t>(e));
        if (!check) {
            auto [x, y] = *check.counterexample;
            throw PreconditionError(std::to_string(e) + "-th powers do not commute: x=" + s.name(x) +
                                    ", y=" + s.name(y));
        }
    }
    ElementMap g(s.order());
    for (std::size_t x = 0; x < s.order(); ++x)
        g[x] = power(s, Element(x), static_cast<std::uint64_t>(cert.g_exponent()));
    if (!check_g_axioms(s, g).all())
        throw InvariantFailure("g(x) = x^" + std::to_string(cert.g_exponent()) +
                               " fails the g-axioms although the power hypotheses hold");
    return g;
}

/// Largest order for the exhaustive search over all n^n maps.
inline constexpr std::size_t max_gmap_search_order = 6;

struct GMapSearch {
    std::uint64_t maps_checked = 0;
    std::vector<ElementMap> satisfying; ///< maps meeting (a), (b) and (c)
};

/// Tries every map S -> S. `limit` caps how many satisfying maps are kept.
inline GMapSearch search_g_maps(const Semigroup& s, std::size_t limit = 16) {
    const std::size_t n = s.order();
    if (n > max_gmap_search_order)
        throw ResourceError("exhaustive map search is capped at order " +
                            std::to_string(max_gmap_search_order));
    GMapSearch out;
    ElementMap g(n, Element(0));
    while (true) {
        ++out.maps_checked;
        if (check_g_axioms(s, g).all() && out.satisfying.size() < limit)
            out.satisfying.push_back(g);
        std::size_t i = 0;
        while (i < n && g[i].index + 1 == n) {
            g[i] = Element(0);
            ++i;
        }
        if (i == n)
            break;
        g[i] = Element(g[i].index + 1);
    }
    return out;
}

} // namespace semicomm

#endif
