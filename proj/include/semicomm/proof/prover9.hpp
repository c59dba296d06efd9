#ifndef SEMICOMM_PROOF_PROVER9_HPP
#define SEMICOMM_PROOF_PROVER9_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "../error.hpp"

namespace semicomm::proof {

enum class Theory { group, semigroup_cancellative };

inline const char* to_string(Theory t) {
    return t == Theory::group ? "group" : "semigroup_cancellative";
}

inline std::optional<Theory> parse_theory(const std::string& s) {
    if (s == "group")
        return Theory::group;
    if (s == "semigroup_cancellative")
        return Theory::semigroup_cancellative;
    return std::nullopt;
}

inline constexpr std::int64_t max_prover9_exponent = 64;

/// v^k fully right-associated: "x", "x * x", "x * (x * x)", ...
inline std::string prover9_power(const std::string& v, std::int64_t k) {
    if (k < 1)
        throw InputError("exponent must be positive");
    if (k == 1)
        return v;
    if (k == 2)
        return v + " * " + v;
    return v + " * (" + prover9_power(v, k - 1) + ")";
}

namespace detail {

inline std::string commute_line(std::int64_t k) {
    const std::string x = prover9_power("x", k), y = prover9_power("y", k);
    return "(" + x + ") * (" + y + ") = (" + y + ") * (" + x + ").";
}

} // namespace detail

/// Prover9 input for "p-th and q-th powers commute implies commutative".
inline std::string emit_prover9(std::int64_t p, std::int64_t q, Theory theory = Theory::group) {
    if (p < 2 || q < 2)
        throw InputError("p and q must be at least 2");
    if (p > max_prover9_exponent || q > max_prover9_exponent)
        throw InputError("exponents above " + std::to_string(max_prover9_exponent) + " are not supported");
    if (std::gcd(p, q) != 1)
        throw InputError("p and q must be coprime, gcd(" + std::to_string(p) + "," + std::to_string(q) +
                         ") = " + std::to_string(std::gcd(p, q)));
    std::string out;
    out += "% p = " + std::to_string(p) + ", q = " + std::to_string(q) + ", theory " + to_string(theory) + "\n";
    out += "formulas(assumptions).\n";
    out += "(x * y) * z = x * (y * z).  % associativity\n";
    if (theory == Theory::group) {
        out += "e * x = x. x * e = x.       % identity\n";
        out += "x' * x = e. x * x' = e.     % inverses\n";
    } else {
        out += "x * y != x * z | y = z.     % left cancellation\n";
        out += "y * x != z * x | y = z.     % right cancellation\n";
    }
    out += "\n" + detail::commute_line(p) + "\n";
    out += "\n" + detail::commute_line(q) + "\n";
    out += "end_of_list.\n\n";
    out += "formulas(goals).\n";
    out += "x * y = y * x.\n";
    out += "end_of_list.\n";
    return out;
}

} // namespace semicomm::proof

#endif
