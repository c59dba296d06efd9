#ifndef SEMICOMM_CONSTRUCT_HPP
#define SEMICOMM_CONSTRUCT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "cayley_table.hpp"
#include "classify.hpp"
#include "error.hpp"

namespace semicomm {

/// The five-element Brandt semigroup on {0, e, f, a, b}: matrix units
/// e = E11, f = E22, a = E12, b = E21 together with the zero matrix.
inline Semigroup brandt_b2() {
    enum : std::size_t { Z = 0, E = 1, F = 2, A = 3, B = 4 };
    std::vector<CayleyTable::cell_type> cells(25, Z);
    auto set = [&](std::size_t x, std::size_t y, std::size_t v) {
        cells[x * 5 + y] = static_cast<CayleyTable::cell_type>(v);
    };
    set(A, B, E);
    set(B, A, F);
    set(E, A, A);
    set(A, F, A);
    set(F, B, B);
    set(B, E, B);
    set(E, E, E);
    set(F, F, F);
    return Semigroup(CayleyTable(5, std::move(cells), std::vector<std::string>{"0", "e", "f", "a", "b"}));
}

inline Semigroup left_zero(std::size_t n) {
    if (n == 0)
        throw InputError("left_zero needs n >= 1");
    return Semigroup(CayleyTable::from_function(n, [](std::size_t x, std::size_t) { return x; }));
}

inline Semigroup right_zero(std::size_t n) {
    if (n == 0)
        throw InputError("right_zero needs n >= 1");
    return Semigroup(CayleyTable::from_function(n, [](std::size_t, std::size_t y) { return y; }));
}

inline Semigroup cyclic_group(std::size_t n) {
    if (n == 0)
        throw InputError("cyclic_group needs n >= 1");
    return Semigroup(CayleyTable::from_function(
        n, [n](std::size_t x, std::size_t y) { return (x + y) % n; }));
}

inline Semigroup klein_group() {
    return Semigroup(direct_product(cyclic_group(2), cyclic_group(2)));
}

/// {x, x^2, ..., x^(m+r-1)} with x^(m+r) = x^m. Element i is x^(i+1).
inline Semigroup monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0)
        throw InputError("monogenic needs index >= 1 and period >= 1");
    const std::size_t n = index + period - 1;
    auto reduce = [=](std::size_t e) { // exponent e >= 1
        if (e < index + period)
            return e;
        return index + (e - index) % period;
    };
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(i == 1 ? std::string("x") : "x^" + std::to_string(i));
    return Semigroup(CayleyTable::from_function(
        n, [&](std::size_t a, std::size_t b) { return reduce(a + 1 + b + 1) - 1; },
        std::move(names)));
}

/// The k-chain 0 < 1 < ... < k-1 under meet.
inline Semigroup chain_semilattice(std::size_t k) {
    if (k == 0)
        throw InputError("chain needs at least one element");
    return Semigroup(CayleyTable::from_function(
        k, [](std::size_t x, std::size_t y) { return std::min(x, y); }));
}

/// S with a new identity adjoined as element 0 (named "1").
inline Semigroup with_identity(const CayleyTable& s) {
    const std::size_t n = s.order() + 1;
    std::vector<std::string> names{"1"};
    for (std::size_t i = 0; i < s.order(); ++i)
        names.push_back(s.name(i));
    return Semigroup(CayleyTable::from_function(
        n,
        [&](std::size_t x, std::size_t y) {
            if (x == 0)
                return y;
            if (y == 0)
                return x;
            return s.at(x - 1, y - 1) + 1;
        },
        std::move(names)));
}

inline bool is_prime(std::size_t p) {
    if (p < 2)
        return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Upper unitriangular 3x3 matrices over Z/p. The matrix with
/// superdiagonal (a, b) and corner c has index a*p^2 + b*p + c.
inline Semigroup heisenberg_mod(std::size_t p) {
    if (!is_prime(p))
        throw InputError("heisenberg_mod needs a prime, got " + std::to_string(p));
    if (p * p * p > CayleyTable::max_order)
        throw ResourceError("heisenberg_mod(" + std::to_string(p) + ") is too large");
    const std::size_t n = p * p * p;
    return Semigroup(CayleyTable::from_function(n, [p](std::size_t x, std::size_t y) {
        const std::size_t a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
        const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
        const std::size_t a = (a1 + a2) % p;
        const std::size_t b = (b1 + b2) % p;
        const std::size_t c = (c1 + c2 + a1 * b2) % p;
        return a * p * p + b * p + c;
    }));
}

/// Permutations of {0..n-1} in lexicographic order; (st)(i) = s(t(i)).
inline Semigroup symmetric_group(std::size_t n) {
    if (n == 0 || n > 6)
        throw InputError("symmetric_group supports 1 <= n <= 6");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    return Semigroup(CayleyTable::from_function(perms.size(), [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = perms[a][perms[b][i]];
        return index_of(c);
    }));
}

using Homomorphism = std::vector<Element>;

inline bool is_homomorphism(const CayleyTable& from, const CayleyTable& to, const Homomorphism& h) {
    if (h.size() != from.order())
        return false;
    for (auto v : h)
        if (!to.contains(v))
            return false;
    for (std::size_t x = 0; x < from.order(); ++x)
        for (std::size_t y = 0; y < from.order(); ++y)
            if (h[from.at(x, y)] != to(h[x], h[y]))
                return false;
    return true;
}

/// Every homomorphism between two small tables, by exhaustive search with
/// a product-consistency prune.
inline std::vector<Homomorphism> all_homomorphisms(const CayleyTable& from, const CayleyTable& to) {
    const std::size_t m = from.order();
    const std::size_t n = to.order();
    std::vector<Homomorphism> out;
    Homomorphism h(m);
    auto consistent = [&](std::size_t upto) {
        for (std::size_t x = 0; x <= upto; ++x)
            for (std::size_t y = 0; y <= upto; ++y) {
                const std::size_t xy = from.at(x, y);
                if (xy <= upto && h[xy] != to(h[x], h[y]))
                    return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            if (is_homomorphism(from, to, h))
                out.push_back(h);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            h[i] = Element(v);
            if (consistent(i))
                self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Strong semilattice of groups over the chain 0 < 1 < ... < k-1.
/// `homs[i]` maps groups[i+1] into groups[i]. Elements of groups[i] occupy
/// a contiguous index block, in chain order; a product of s in G_i and t in
/// G_j is computed in G_min(i,j) after pushing both factors down.
inline Semigroup strong_semilattice_of_groups(const std::vector<Semigroup>& groups,
                                              const std::vector<Homomorphism>& homs) {
    const std::size_t k = groups.size();
    if (k == 0)
        throw InputError("need at least one group");
    if (homs.size() + 1 != k)
        throw InputError("need exactly one homomorphism per adjacent pair of the chain");
    for (std::size_t i = 0; i < k; ++i)
        if (!check_regularity(groups[i]).group)
            throw InputError("component " + std::to_string(i) + " is not a group");
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!is_homomorphism(groups[i + 1], groups[i], homs[i]))
            throw InputError("map " + std::to_string(i) + " is not a homomorphism");

    std::vector<std::size_t> offset(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
        offset[i + 1] = offset[i] + groups[i].order();
    const std::size_t n = offset[k];
    if (n > CayleyTable::max_order)
        throw ResourceError("strong semilattice is too large");
    std::vector<std::size_t> level(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t x = offset[i]; x < offset[i + 1]; ++x)
            level[x] = i;
    auto push_down = [&](std::size_t local, std::size_t from, std::size_t to_level) {
        for (std::size_t l = from; l > to_level; --l)
            local = homs[l - 1][local].index;
        return local;
    };
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t x = 0; x < groups[i].order(); ++x)
            names.push_back(groups[i].name(x) + "@" + std::to_string(i));
    Semigroup out(CayleyTable::from_function(
        n,
        [&](std::size_t x, std::size_t y) {
            const std::size_t lx = level[x], ly = level[y];
            const std::size_t l = std::min(lx, ly);
            const std::size_t a = push_down(x - offset[lx], lx, l);
            const std::size_t b = push_down(y - offset[ly], ly, l);
            return offset[l] + groups[l].at(a, b);
        },
        std::move(names)));
    if (!check_regularity(out).clifford)
        throw InvariantFailure("strong semilattice of groups is not Clifford");
    return out;
}

} // namespace semicomm

#endif
