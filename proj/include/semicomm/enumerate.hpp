#ifndef SEMICOMM_ENUMERATE_HPP
#define SEMICOMM_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <type_traits>
#include <vector>

#include "cayley_table.hpp"
#include "error.hpp"

namespace semicomm {

/// Largest order canonical_form will attempt (n! relabelings).
inline constexpr std::size_t max_canonical_order = 7;

/// Lexicographically least table among all relabelings of `s`. Names are
/// dropped since they are not isomorphism invariants.
inline CayleyTable canonical_form(const CayleyTable& s) {
    const std::size_t n = s.order();
    if (n > max_canonical_order)
        throw ResourceError("canonical_form supports order <= " + std::to_string(max_canonical_order));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    CayleyTable best = s.without_names();
    do {
        CayleyTable candidate = relabel(s, perm).without_names();
        if (lex_less(candidate, best))
            best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// True when no relabeling of `s` is lexicographically smaller. Compares
/// cell by cell and abandons a permutation at the first difference.
inline bool is_canonical(const CayleyTable& s) {
    const std::size_t n = s.order();
    if (n > max_canonical_order)
        throw ResourceError("is_canonical supports order <= " + std::to_string(max_canonical_order));
    std::vector<std::size_t> perm(n), inv(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t i = 0; i < n; ++i)
            inv[perm[i]] = i;
        for (std::size_t c = 0; c < n * n; ++c) {
            const std::size_t x = c / n, y = c % n;
            const std::size_t mine = s.at(x, y);
            const std::size_t theirs = perm[s.at(inv[x], inv[y])];
            if (theirs < mine)
                return false;
            if (theirs > mine)
                break;
        }
    }
    return true;
}

struct EnumerationOptions {
    std::size_t order = 1;
    /// Emit only tables that are their own canonical form.
    bool up_to_iso = false;
    /// Applied after associativity (and after the isomorphism filter).
    std::function<bool(const Semigroup&)> filter;
    /// Order in which cells (row-major indices) are decided; empty means
    /// row-major, which makes the output lexicographically sorted.
    std::vector<std::size_t> cell_order;
    /// Deterministic split by the assignment of the first `order` cells:
    /// this run explores prefixes whose ordinal is congruent to
    /// partition_index modulo partition_count.
    std::size_t partition_index = 0;
    std::size_t partition_count = 1;
    /// Configurable hard cap on `order`.
    std::size_t max_order = 5;
};

namespace detail {

class Backtracker {
public:
    static constexpr std::uint8_t unset = 0xFF;

    explicit Backtracker(const EnumerationOptions& opt) : opt_(opt), n_(opt.order) {
        if (n_ == 0 || n_ > opt.max_order)
            throw InputError("enumeration order must be in [1, " + std::to_string(opt.max_order) +
                             "], got " + std::to_string(n_));
        if (opt.max_order > 7)
            throw ResourceError("enumeration is capped at order 7");
        if (opt.partition_count == 0 || opt.partition_index >= opt.partition_count)
            throw InputError("invalid enumeration partition");
        cells_.assign(n_ * n_, unset);
        order_ = opt.cell_order;
        if (order_.empty()) {
            order_.resize(n_ * n_);
            std::iota(order_.begin(), order_.end(), std::size_t{0});
        } else {
            std::vector<std::size_t> sorted = order_;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted.size() != n_ * n_ || sorted[i] != i)
                    throw InputError("cell_order must be a permutation of the n*n cells");
        }
    }

    template <class Emit>
    void run(Emit&& emit) {
        stop_ = false;
        prefix_ordinal_ = 0;
        descend(0, emit);
    }

private:
    std::uint8_t t(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }

    // Checks every triple whose four products are decided and which uses cell (i, j).
    bool consistent(std::size_t i, std::size_t j) const {
        const std::size_t n = n_;
        const std::uint8_t v = t(i, j);
        for (std::size_t z = 0; z < n; ++z) { // (ij)z = i(jz)
            const std::uint8_t a = t(v, z), b = t(j, z);
            if (a != unset && b != unset) {
                const std::uint8_t c = t(i, b);
                if (c != unset && c != a)
                    return false;
            }
        }
        for (std::size_t x = 0; x < n; ++x) { // (xi)j = x(ij)
            const std::uint8_t xi = t(x, i);
            if (xi == unset)
                continue;
            const std::uint8_t a = t(xi, j), c = t(x, v);
            if (a != unset && c != unset && a != c)
                return false;
        }
        for (std::size_t x = 0; x < n; ++x) // (xy)j with xy = i
            for (std::size_t y = 0; y < n; ++y) {
                if (t(x, y) != i)
                    continue;
                const std::uint8_t b = t(y, j);
                if (b == unset)
                    continue;
                const std::uint8_t c = t(x, b);
                if (c != unset && c != v)
                    return false;
            }
        for (std::size_t y = 0; y < n; ++y) // i(yz) with yz = j
            for (std::size_t z = 0; z < n; ++z) {
                if (t(y, z) != j)
                    continue;
                const std::uint8_t a = t(i, y);
                if (a == unset)
                    continue;
                const std::uint8_t c = t(a, z);
                if (c != unset && c != v)
                    return false;
            }
        return true;
    }

    template <class Emit>
    void descend(std::size_t depth, Emit& emit) {
        if (stop_)
            return;
        if (depth == n_ && opt_.partition_count > 1) {
            const std::size_t ordinal = prefix_ordinal_++;
            if (ordinal % opt_.partition_count != opt_.partition_index)
                return;
        }
        if (depth == cells_.size()) {
            leaf(emit);
            return;
        }
        const std::size_t cell = order_[depth];
        const std::size_t i = cell / n_, j = cell % n_;
        for (std::size_t v = 0; v < n_ && !stop_; ++v) {
            cells_[cell] = static_cast<std::uint8_t>(v);
            if (consistent(i, j))
                descend(depth + 1, emit);
        }
        cells_[cell] = unset;
    }

    template <class Emit>
    void leaf(Emit& emit) {
        std::vector<CayleyTable::cell_type> cells(cells_.begin(), cells_.end());
        CayleyTable table(n_, std::move(cells));
        if (opt_.up_to_iso && !is_canonical(table))
            return;
        Semigroup s(std::move(table));
        if (opt_.filter && !opt_.filter(s))
            return;
        if constexpr (std::is_same_v<std::invoke_result_t<Emit&, const Semigroup&>, bool>) {
            if (!emit(static_cast<const Semigroup&>(s)))
                stop_ = true;
        } else {
            emit(static_cast<const Semigroup&>(s));
        }
    }

    const EnumerationOptions& opt_;
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
    std::vector<std::size_t> order_;
    std::size_t prefix_ordinal_ = 0;
    bool stop_ = false;
};

} // namespace detail

/// Calls `visit(const Semigroup&)` for every associative table of the
/// requested order. A visitor returning bool stops the search on false.
template <class Visitor>
void enumerate_semigroups(const EnumerationOptions& options, Visitor&& visit) {
    detail::Backtracker bt(options);
    bt.run(visit);
}

inline std::vector<Semigroup> all_semigroups(const EnumerationOptions& options) {
    std::vector<Semigroup> out;
    enumerate_semigroups(options, [&](const Semigroup& s) { out.push_back(s); });
    return out;
}

inline std::size_t count_semigroups(const EnumerationOptions& options) {
    std::size_t count = 0;
    enumerate_semigroups(options, [&](const Semigroup&) { ++count; });
    return count;
}

/// Runs `work(acc, s)` over the enumeration split across `jobs` threads by
/// first-row prefix. Returns one accumulator per partition, in partition
/// order; callers merge them.
template <class Acc, class Work>
std::vector<Acc> enumerate_partitioned(EnumerationOptions options, std::size_t jobs, Work work) {
    if (jobs == 0)
        jobs = 1;
    std::vector<Acc> accs(jobs);
    if (jobs == 1) {
        enumerate_semigroups(options, [&](const Semigroup& s) { work(accs[0], s); });
        return accs;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w, options]() mutable {
            try {
                options.partition_index = w;
                options.partition_count = jobs;
                enumerate_semigroups(options, [&](const Semigroup& s) { work(accs[w], s); });
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return accs;
}

} // namespace semicomm

#endif
