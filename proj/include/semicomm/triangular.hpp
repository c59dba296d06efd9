#ifndef SEMICOMM_TRIANGULAR_HPP
#define SEMICOMM_TRIANGULAR_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace semicomm {

using BigInt = boost::multiprecision::cpp_int;

/// The matrix [[1, a], [0, b]] with a, b positive integers. These form an
/// infinite cancellative semigroup with no idempotents under matrix
/// multiplication.
struct TriElement {
    BigInt a{1};
    BigInt b{1};

    TriElement() = default;
    TriElement(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a < 1 || b < 1)
            throw InputError("triangular entries must be positive");
    }

    friend bool operator==(const TriElement&, const TriElement&) = default;

    friend std::ostream& operator<<(std::ostream& out, const TriElement& x) {
        return out << '(' << x.a << ',' << x.b << ')';
    }

    std::string str() const {
        return "(" + a.str() + "," + b.str() + ")";
    }
};

/// [[1,a],[0,b]] * [[1,c],[0,d]] = [[1, c + a d], [0, b d]].
inline TriElement tri_mul(const TriElement& x, const TriElement& y) {
    TriElement r;
    r.a = y.a + x.a * y.b;
    r.b = x.b * y.b;
    return r;
}

inline TriElement tri_power(const TriElement& x, std::uint64_t k) {
    if (k == 0)
        throw InputError("power exponent must be at least 1");
    TriElement r = x;
    for (std::uint64_t i = 1; i < k; ++i)
        r = tri_mul(r, x);
    return r;
}

/// The unique y with x*y = w, if one exists in the semigroup.
inline std::optional<TriElement> tri_left_divide(const TriElement& x, const TriElement& w) {
    if (w.b % x.b != 0)
        return std::nullopt;
    BigInt d = w.b / x.b;
    BigInt c = w.a - x.a * d;
    if (c < 1 || d < 1)
        return std::nullopt;
    return TriElement(std::move(c), std::move(d));
}

/// The unique y with y*x = w, if one exists in the semigroup.
inline std::optional<TriElement> tri_right_divide(const TriElement& w, const TriElement& x) {
    // y = (p, q): y*x = (x.a + p x.b, q x.b)
    if (w.b % x.b != 0)
        return std::nullopt;
    BigInt q = w.b / x.b;
    BigInt num = w.a - x.a;
    if (num < 1 || num % x.b != 0)
        return std::nullopt;
    BigInt p = num / x.b;
    if (q < 1)
        return std::nullopt;
    return TriElement(std::move(p), std::move(q));
}

} // namespace semicomm

#endif
