#pragma once

// Exhaustive generation of STab(mu, a) and everything derived from it by
// brute force: Kostka numbers, the full poset with its Hasse diagram, and the
// witness search for boxes that can hold the largest value.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/core.hpp"
#include "tableaux/error.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

inline constexpr Part kDefaultEnumerationCap = 20;

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(Part n) {
    std::vector<Partition> out;
    std::vector<Part> cur;
    auto rec = [&](auto&& self, Part rest, Part max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (Part p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All compositions of n (2^(n-1) of them for n >= 1), in lexicographic order.
inline std::vector<Composition> compositions_of(Part n) {
    std::vector<Composition> out;
    std::vector<Part> cur;
    auto rec = [&](auto&& self, Part rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (Part p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

namespace detail {

inline void require_enumerable(const Partition& mu, const Composition& a, Part cap) {
    if (mu.total() != a.total())
        throw Error(ErrorCode::SumMismatch, "|mu| = " + std::to_string(mu.total()) +
                                                " but |a| = " + std::to_string(a.total()));
    if (mu.total() > cap)
        throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(mu.total()) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(cap));
}

/// Depth-first fill in row-major order, smallest feasible entry first.
/// Calls `visit(grid)` for every complete semistandard filling of weight a.
template <class Visit>
void fill_tableaux(const Partition& mu, const Composition& a, Visit&& visit) {
    const std::size_t k = mu.height();
    const auto h = static_cast<Part>(a.height());
    std::vector<Row> grid;
    for (Part len : mu.parts())
        grid.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<Part> remaining = a.parts();

    // Column heights bound each entry from above: the cells below (i, j) in
    // column j need strictly larger values.
    auto rows_below = [&](std::size_t i, std::size_t j) {
        std::size_t below = 0;
        for (std::size_t r = i + 1; r < k && static_cast<std::size_t>(mu.parts()[r]) > j; ++r)
            ++below;
        return static_cast<Part>(below);
    };

    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == k) {
            visit(std::as_const(grid));
            return;
        }
        const std::size_t next_i = j + 1 == grid[i].size() ? i + 1 : i;
        const std::size_t next_j = j + 1 == grid[i].size() ? 0 : j + 1;
        Part lo = 1;
        if (j > 0)
            lo = std::max(lo, grid[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, grid[i - 1][j] + 1);
        const Part hi = h - rows_below(i, j);
        for (Part v = lo; v <= hi; ++v) {
            auto& left = remaining[static_cast<std::size_t>(v - 1)];
            if (left == 0)
                continue;
            --left;
            grid[i][j] = v;
            self(self, next_i, next_j);
            ++left;
        }
        grid[i][j] = 0;
    };
    if (k == 0) {
        if (a.empty())
            visit(std::as_const(grid));
        return;
    }
    rec(rec, 0, 0);
}

} // namespace detail

/// STab(mu, a) in lexicographic order of row-major reading words. Empty iff
/// mu does not dominate lambda(a).
inline std::vector<Tableau> enumerate_tableaux(const Partition& mu, const Composition& a,
                                               Part cap = kDefaultEnumerationCap) {
    detail::require_enumerable(mu, a, cap);
    std::vector<Tableau> out;
    detail::fill_tableaux(mu, a, [&](const std::vector<Row>& grid) { out.emplace_back(mu, grid); });
    return out;
}

/// |STab(mu, a)|, counted by enumeration.
inline std::uint64_t kostka(const Partition& mu, const Composition& a,
                            Part cap = kDefaultEnumerationCap) {
    detail::require_enumerable(mu, a, cap);
    std::uint64_t count = 0;
    detail::fill_tableaux(mu, a, [&](const std::vector<Row>&) {
        if (__builtin_add_overflow(count, 1u, &count))
            throw Error(ErrorCode::Overflow, "Kostka number exceeds 64 bits");
    });
    return count;
}

/// Is there T in STab(mu, a) with T(r, mu_r) = h(a)?
inline bool removable_oracle(const Partition& mu, const Composition& a, std::size_t r,
                             Part cap = kDefaultEnumerationCap) {
    detail::require_enumerable(mu, a, cap);
    if (r < 1 || r > mu.height())
        throw Error(ErrorCode::NoSuchIndex, "row " + std::to_string(r) + " is outside 1.." +
                                                std::to_string(mu.height()));
    const auto h = static_cast<Part>(a.height());
    bool found = false;
    detail::fill_tableaux(mu, a, [&](const std::vector<Row>& grid) {
        if (grid[r - 1].back() == h)
            found = true;
    });
    return found;
}

// ---------------------------------------------------------------------------

struct PosetSummary {
    std::vector<Tableau> elements;
    /// (i, j): elements[i] is covered by elements[j]. Sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::optional<std::size_t> greatest;
    std::optional<std::size_t> least;
    bool is_total_order = true;
};

/// Pairwise comparison matrix: less[i][j] iff elements[i] < elements[j].
inline std::vector<std::vector<bool>> strict_order_matrix(const std::vector<Tableau>& elements) {
    const std::size_t m = elements.size();
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto c = compare(elements[i], elements[j]);
            if (c == ComparisonResult::Less)
                less[i][j] = true;
            else if (c == ComparisonResult::Greater)
                less[j][i] = true;
        }
    return less;
}

inline PosetSummary build_poset(const Partition& mu, const Composition& a,
                                Part cap = kDefaultEnumerationCap) {
    PosetSummary poset;
    poset.elements = enumerate_tableaux(mu, a, cap);
    const std::size_t m = poset.elements.size();
    const auto less = strict_order_matrix(poset.elements);

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!less[i][j] && !less[j][i])
                poset.is_total_order = false;

    // transitive reduction: drop i < j whenever some i < x < j
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!less[i][j])
                continue;
            bool implied = false;
            for (std::size_t x = 0; x < m && !implied; ++x)
                implied = less[i][x] && less[x][j];
            if (!implied)
                poset.covers.emplace_back(i, j);
        }

    for (std::size_t i = 0; i < m; ++i) {
        std::size_t below = 0, above = 0;
        for (std::size_t j = 0; j < m; ++j) {
            below += less[j][i];
            above += less[i][j];
        }
        if (below + 1 == m)
            poset.greatest = i;
        if (above + 1 == m)
            poset.least = i;
    }
    return poset;
}

} // namespace tableaux
