#ifndef SEMICOMM_DECOMPOSE_HPP
#define SEMICOMM_DECOMPOSE_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cayley_table.hpp"
#include "classify.hpp"
#include "error.hpp"

namespace semicomm {

/// Disjoint-set forest with union by rank and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true when two distinct classes were merged.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

/// An equivalence relation on [0, n). Each class is named by its minimal
/// element index.
class Partition {
public:
    Partition() = default;

    static Partition from(UnionFind& uf) {
        Partition p;
        const std::size_t n = uf.size();
        p.class_of_.assign(n, n);
        std::vector<std::size_t> min_of_root(n, n);
        for (std::size_t x = 0; x < n; ++x) {
            auto r = uf.find(x);
            if (min_of_root[r] == n)
                min_of_root[r] = x;
            p.class_of_[x] = min_of_root[r];
        }
        for (std::size_t x = 0; x < n; ++x)
            if (p.class_of_[x] == x)
                p.ids_.push_back(x);
        return p;
    }

    static Partition identity(std::size_t n) {
        UnionFind uf(n);
        return from(uf);
    }

    std::size_t size() const noexcept { return class_of_.size(); }
    std::size_t class_count() const noexcept { return ids_.size(); }
    std::size_t class_of(std::size_t x) const { return class_of_.at(x); }
    std::size_t class_of(Element x) const { return class_of(x.index); }

    /// Class ids in ascending order.
    const std::vector<std::size_t>& class_ids() const noexcept { return ids_; }

    /// Position of a class id within class_ids().
    std::size_t class_position(std::size_t id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id)
            throw InputError("unknown class id " + std::to_string(id));
        return static_cast<std::size_t>(it - ids_.begin());
    }

    std::vector<Element> members(std::size_t id) const {
        std::vector<Element> out;
        for (std::size_t x = 0; x < class_of_.size(); ++x)
            if (class_of_[x] == id)
                out.emplace_back(x);
        return out;
    }

    /// True when every class of *this lies inside a class of `coarser`.
    bool refines(const Partition& coarser) const {
        for (std::size_t x = 0; x < size(); ++x)
            if (coarser.class_of(class_of_[x]) != coarser.class_of(x))
                return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> ids_;
};

/// Least congruence containing `pairs`: union the generators, then sweep
/// left and right translations of every element against its representative
/// until a full pass merges nothing.
inline Partition congruence_closure(const Semigroup& s, const std::vector<ElementPair>& pairs) {
    const std::size_t n = s.order();
    UnionFind uf(n);
    for (auto [a, b] : pairs) {
        require_element(s, a);
        require_element(s, b);
        uf.unite(a.index, b.index);
    }
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t r = uf.find(x);
            if (r == x)
                continue;
            for (std::size_t t = 0; t < n; ++t) {
                merged |= uf.unite(s.at(t, x), s.at(t, r));
                merged |= uf.unite(s.at(x, t), s.at(r, t));
            }
        }
    }
    return Partition::from(uf);
}

/// Multiplication induced on classes; throws InvariantFailure when the
/// partition is not a congruence.
inline CayleyTable quotient_table(const Semigroup& s, const Partition& p,
                                  const std::string& name_prefix = "c") {
    const auto& ids = p.class_ids();
    const std::size_t m = ids.size();
    std::vector<CayleyTable::cell_type> cells(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cells[i * m + j] =
                static_cast<CayleyTable::cell_type>(p.class_position(p.class_of(s.at(ids[i], ids[j]))));
    for (std::size_t x = 0; x < s.order(); ++x)
        for (std::size_t y = 0; y < s.order(); ++y) {
            auto i = p.class_position(p.class_of(x));
            auto j = p.class_position(p.class_of(y));
            if (cells[i * m + j] != p.class_position(p.class_of(s.at(x, y))))
                throw InvariantFailure("partition is not compatible with multiplication at (" +
                                       s.name(x) + ", " + s.name(y) + ")");
        }
    std::vector<std::string> names;
    for (auto id : ids)
        names.push_back(name_prefix + std::to_string(id));
    return CayleyTable(m, std::move(cells), std::move(names));
}

inline Partition least_semilattice_congruence(const Semigroup& s) {
    const std::size_t n = s.order();
    std::vector<ElementPair> gens;
    for (std::size_t x = 0; x < n; ++x) {
        gens.emplace_back(Element(s.at(x, x)), Element(x));
        for (std::size_t y = x + 1; y < n; ++y)
            gens.emplace_back(Element(s.at(x, y)), Element(s.at(y, x)));
    }
    Partition p = congruence_closure(s, gens);
    auto q = quotient_table(s, p);
    for (std::size_t i = 0; i < q.order(); ++i) {
        if (q.at(i, i) != i)
            throw InvariantFailure("semilattice quotient is not idempotent");
        for (std::size_t j = 0; j < q.order(); ++j)
            if (q.at(i, j) != q.at(j, i))
                throw InvariantFailure("semilattice quotient is not commutative");
    }
    return p;
}

/// Components are listed in class-id order; component i is the induced
/// sub-semigroup on `members[i]`, whose element names carry "@<class id>".
struct SemilatticeDecomposition {
    Partition partition;
    std::vector<std::vector<Element>> members;
    std::vector<Semigroup> components;
    Semigroup meet_table;
};

inline SemilatticeDecomposition decompose_semilattice(const Semigroup& s) {
    Partition p = least_semilattice_congruence(s);
    std::vector<std::vector<Element>> members;
    std::vector<Semigroup> components;
    for (auto id : p.class_ids()) {
        auto m = p.members(id);
        components.emplace_back(induced_subtable(s, m, "@" + std::to_string(id)));
        members.push_back(std::move(m));
    }
    Semigroup meet(quotient_table(s, p));
    for (std::size_t x = 0; x < s.order(); ++x)
        for (std::size_t y = 0; y < s.order(); ++y) {
            auto a = p.class_position(p.class_of(x));
            auto b = p.class_position(p.class_of(y));
            if (p.class_position(p.class_of(s.at(x, y))) != meet.at(a, b))
                throw InvariantFailure("product leaves the meet component");
        }
    return SemilatticeDecomposition{std::move(p), std::move(members), std::move(components),
                                    std::move(meet)};
}

struct Prop12Audit {
    bool separative = false;
    bool all_components_cancellative = false;
    bool agree = false;
};

/// Compares separativity with "every class of the least semilattice
/// congruence is cancellative". Disagreement is reported, not thrown.
inline Prop12Audit audit_prop_1_2(const Semigroup& s) {
    Prop12Audit a;
    a.separative = separativity(s).holds();
    auto d = decompose_semilattice(s);
    a.all_components_cancellative = true;
    for (const auto& c : d.components)
        if (!is_cancellative(c)) {
            a.all_components_cancellative = false;
            break;
        }
    a.agree = a.separative == a.all_components_cancellative;
    return a;
}

} // namespace semicomm

#endif
