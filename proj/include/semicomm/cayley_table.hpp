#ifndef SEMICOMM_CAYLEY_TABLE_HPP
#define SEMICOMM_CAYLEY_TABLE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semicomm {

/// An element of a finite magma, identified by its 0-based row/column index.
struct Element {
    std::uint32_t index = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

    friend constexpr auto operator<=>(Element, Element) = default;
};

using ElementPair = std::pair<Element, Element>;

/// A finite magma given by its multiplication table. Construction checks
/// closure and name distinctness only; associativity is a separate question
/// (see Semigroup).
class CayleyTable {
public:
    using cell_type = std::uint32_t;

    /// Hard upper bound on the order of any table the library will build.
    static constexpr std::size_t max_order = 1024;

    CayleyTable() = default;

    CayleyTable(std::size_t order, std::vector<cell_type> cells,
                std::optional<std::vector<std::string>> names = std::nullopt)
        : order_(order), cells_(std::move(cells)), names_(std::move(names)) {
        if (order_ == 0)
            throw InputError("table order must be positive");
        if (order_ > max_order)
            throw ResourceError("table order " + std::to_string(order_) + " exceeds maximum " +
                                std::to_string(max_order));
        if (cells_.size() != order_ * order_)
            throw InputError("table of order " + std::to_string(order_) + " needs " +
                             std::to_string(order_ * order_) + " cells, got " +
                             std::to_string(cells_.size()));
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (cells_[i] >= order_)
                throw InputError("entry at row " + std::to_string(i / order_) + ", column " +
                                 std::to_string(i % order_) + " is " + std::to_string(cells_[i]) +
                                 ", outside [0," + std::to_string(order_) + ")");
        }
        if (names_) {
            if (names_->size() != order_)
                throw InputError("expected " + std::to_string(order_) + " names, got " +
                                 std::to_string(names_->size()));
            std::set<std::string> seen;
            for (const auto& name : *names_) {
                if (name.empty())
                    throw InputError("element names must be nonempty");
                for (char c : name)
                    if (c <= ' ' || c == 127)
                        throw InputError("element name '" + name + "' is not printable");
                if (!seen.insert(name).second)
                    throw InputError("duplicate element name '" + name + "'");
            }
        }
    }

    /// Builds a table from `op(i, j)`.
    template <class BinaryOp>
    static CayleyTable from_function(std::size_t order, BinaryOp op,
                                     std::optional<std::vector<std::string>> names = std::nullopt) {
        if (order == 0)
            throw InputError("table order must be positive");
        if (order > max_order)
            throw ResourceError("table order " + std::to_string(order) + " exceeds maximum " +
                                std::to_string(max_order));
        std::vector<cell_type> cells(order * order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j)
                cells[i * order + j] = static_cast<cell_type>(op(i, j));
        return CayleyTable(order, std::move(cells), std::move(names));
    }

    std::size_t order() const noexcept { return order_; }

    /// Unchecked product of raw indices.
    std::size_t at(std::size_t i, std::size_t j) const noexcept { return cells_[i * order_ + j]; }

    Element operator()(Element x, Element y) const noexcept {
        return Element(at(x.index, y.index));
    }

    std::span<const cell_type> cells() const noexcept { return cells_; }
    std::span<const cell_type> row(std::size_t i) const noexcept {
        return std::span<const cell_type>(cells_).subspan(i * order_, order_);
    }

    bool contains(Element x) const noexcept { return x.index < order_; }

    bool has_names() const noexcept { return names_.has_value(); }
    const std::optional<std::vector<std::string>>& names() const noexcept { return names_; }

    std::string name(std::size_t i) const {
        if (names_)
            return (*names_)[i];
        return "e" + std::to_string(i);
    }
    std::string name(Element x) const { return name(x.index); }

    /// Index of the element with the given label (custom or default).
    std::optional<Element> find(const std::string& label) const {
        for (std::size_t i = 0; i < order_; ++i)
            if (name(i) == label)
                return Element(i);
        return std::nullopt;
    }

    CayleyTable without_names() const { return CayleyTable(order_, cells_); }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    std::size_t order_ = 0;
    std::vector<cell_type> cells_;
    std::optional<std::vector<std::string>> names_;
};

/// Lexicographic order on tables: by order, then row-major cell sequence.
inline bool lex_less(const CayleyTable& a, const CayleyTable& b) {
    if (a.order() != b.order())
        return a.order() < b.order();
    return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(),
                                        b.cells().end());
}

inline void require_element(const CayleyTable& s, Element x) {
    if (!s.contains(x))
        throw InputError("element index " + std::to_string(x.index) + " out of range for order " +
                         std::to_string(s.order()));
}

inline Element multiply(const CayleyTable& s, Element x, Element y) {
    require_element(s, x);
    require_element(s, y);
    return s(x, y);
}

/// First triple (x, y, z) in index order with (xy)z != x(yz).
inline std::optional<std::tuple<Element, Element, Element>> associativity_witness(
    const CayleyTable& s) {
    const std::size_t n = s.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t xy = s.at(x, y);
            for (std::size_t z = 0; z < n; ++z)
                if (s.at(xy, z) != s.at(x, s.at(y, z)))
                    return std::tuple{Element(x), Element(y), Element(z)};
        }
    return std::nullopt;
}

inline bool is_associative(const CayleyTable& s) { return !associativity_witness(s); }

/// A CayleyTable known to be associative. The only way to obtain one is
/// through the checking constructor, so every semigroup-only operation can
/// take this type instead of re-validating.
class Semigroup : public CayleyTable {
public:
    explicit Semigroup(CayleyTable table) : CayleyTable(std::move(table)) {
        if (auto w = associativity_witness(*this)) {
            auto [x, y, z] = *w;
            throw ContractViolation("table is not associative: (" + name(x) + "*" + name(y) +
                                    ")*" + name(z) + " != " + name(x) + "*(" + name(y) + "*" +
                                    name(z) + ")");
        }
    }

    const CayleyTable& table() const noexcept { return *this; }
};

/// x^k for k >= 1, by repeated squaring. Assumes associativity.
inline Element power(const CayleyTable& s, Element x, std::uint64_t k) {
    require_element(s, x);
    if (k == 0)
        throw InputError("power exponent must be at least 1 (no identity is assumed)");
    std::size_t result = x.index;
    std::size_t base = x.index;
    --k;
    while (k > 0) {
        if (k & 1U)
            result = s.at(result, base);
        base = s.at(base, base);
        k >>= 1U;
    }
    return Element(result);
}

inline std::vector<Element> idempotents(const CayleyTable& s) {
    std::vector<Element> out;
    for (std::size_t x = 0; x < s.order(); ++x)
        if (s.at(x, x) == x)
            out.emplace_back(x);
    return out;
}

/// Componentwise product; element (s, t) has index s * |T| + t.
inline CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
    const std::size_t m = a.order();
    const std::size_t n = b.order();
    if (m * n > CayleyTable::max_order)
        throw ResourceError("direct product order " + std::to_string(m * n) + " exceeds maximum " +
                            std::to_string(CayleyTable::max_order));
    std::optional<std::vector<std::string>> names;
    if (a.has_names() || b.has_names()) {
        names.emplace();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                names->push_back("(" + a.name(i) + "," + b.name(j) + ")");
    }
    return CayleyTable::from_function(
        m * n,
        [&](std::size_t x, std::size_t y) {
            return a.at(x / n, y / n) * n + b.at(x % n, y % n);
        },
        std::move(names));
}

inline CayleyTable opposite(const CayleyTable& s) {
    return CayleyTable::from_function(
        s.order(), [&](std::size_t x, std::size_t y) { return s.at(y, x); }, s.names());
}

/// Image of `s` under the bijection `perm` (element i becomes perm[i]).
inline CayleyTable relabel(const CayleyTable& s, std::span<const std::size_t> perm) {
    const std::size_t n = s.order();
    if (perm.size() != n)
        throw InputError("relabeling must list one image per element");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inverse[perm[i]] != n)
            throw InputError("relabeling is not a permutation");
        inverse[perm[i]] = i;
    }
    std::optional<std::vector<std::string>> names;
    if (s.has_names()) {
        names.emplace(n);
        for (std::size_t i = 0; i < n; ++i)
            (*names)[perm[i]] = s.name(i);
    }
    return CayleyTable::from_function(
        n, [&](std::size_t x, std::size_t y) { return perm[s.at(inverse[x], inverse[y])]; },
        std::move(names));
}

/// Sub-table induced on `members` (ascending), relabeled 0..m-1. Throws
/// InvariantFailure when the subset is not closed.
inline CayleyTable induced_subtable(const CayleyTable& s, std::span<const Element> members,
                                    const std::string& name_suffix = "") {
    std::vector<std::size_t> position(s.order(), s.order());
    for (std::size_t i = 0; i < members.size(); ++i)
        position[members[i].index] = i;
    std::vector<std::string> names;
    for (auto m : members)
        names.push_back(s.name(m) + name_suffix);
    std::vector<CayleyTable::cell_type> cells;
    cells.reserve(members.size() * members.size());
    for (auto x : members)
        for (auto y : members) {
            const std::size_t xy = s.at(x.index, y.index);
            if (position[xy] == s.order())
                throw InvariantFailure("subset is not closed: " + s.name(x) + "*" + s.name(y) +
                                       " = " + s.name(xy));
            cells.push_back(static_cast<CayleyTable::cell_type>(position[xy]));
        }
    return CayleyTable(members.size(), std::move(cells), std::move(names));
}

} // namespace semicomm

#endif
