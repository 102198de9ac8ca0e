#pragma once

// Constructions of elements of STab(mu, a): the greatest element, a tableau
// whose largest value sits in the topmost removable box, and the least
// element (optionally restricted to tableaux whose largest value starts at
// or below a given row).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/core.hpp"
#include "tableaux/error.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

struct Assignment {
    std::size_t row = 0;
    std::size_t col = 0;
    Part value = 0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// One iteration of a construction loop. Fields that the loop does not use
/// stay empty.
struct TraceRecord {
    std::size_t step = 0;
    Partition nu;
    Composition b;
    std::optional<Partition> rho;
    std::optional<std::size_t> l;
    std::optional<std::size_t> l_prime;
    std::vector<Assignment> assignments;
};

struct TracedTableau {
    Tableau tableau;
    std::vector<TraceRecord> trace;
};

/// The sequences a^i, l_i, mu^i driving the least-element construction.
/// l_seq[i] is l_{i+1}; floors[i] is the lower bound handed to l(mu^i, a^i, .).
struct LeastTrace {
    std::vector<Composition> a_seq;
    std::vector<std::size_t> l_seq;
    std::vector<Partition> mu_seq;
    std::vector<Part> reset_set;
    std::vector<std::size_t> floors;
};

namespace detail {

inline void require_same_total(const Partition& mu, const Composition& a) {
    if (mu.total() != a.total())
        throw Error(ErrorCode::SumMismatch, "|mu| = " + std::to_string(mu.total()) +
                                                " but |a| = " + std::to_string(a.total()));
}

inline void require_dominating(const Partition& mu, const Composition& a) {
    require_same_total(mu, a);
    const Partition lambda = sort_to_partition(a);
    if (!dominates(mu, lambda))
        throw Error(ErrorCode::NotDominating, "mu=" + join(mu.parts()) +
                                                  " does not dominate lambda(a)=" +
                                                  join(lambda.parts()));
}

/// Working grid of shape mu; 0 marks an unassigned cell.
inline std::vector<Row> empty_grid(const Partition& mu) {
    std::vector<Row> grid;
    grid.reserve(mu.height());
    for (Part len : mu.parts())
        grid.emplace_back(static_cast<std::size_t>(len), 0);
    return grid;
}

inline void assign(std::vector<Row>& grid, std::vector<Assignment>& log, std::size_t row,
                   std::size_t col, Part value) {
    grid[row - 1][col - 1] = value;
    log.push_back({row, col, value});
}

/// Writes `value` into every cell of nu/rho, top row first, left to right.
inline std::vector<Assignment> fill_skew(std::vector<Row>& grid, const Partition& nu,
                                         const Partition& rho, Part value) {
    std::vector<Assignment> log;
    for (std::size_t i = 1; i <= nu.height(); ++i)
        for (Part j = rho.part(i) + 1; j <= nu.part(i); ++j)
            assign(grid, log, i, static_cast<std::size_t>(j), value);
    return log;
}

inline std::vector<Assignment> fill_first_row(std::vector<Row>& grid, const Partition& nu) {
    std::vector<Assignment> log;
    for (Part j = 1; j <= nu.part(1); ++j)
        assign(grid, log, 1, static_cast<std::size_t>(j), 1);
    return log;
}

} // namespace detail

/// STab(mu, a) is nonempty iff mu dominates lambda(a).
inline bool is_nonempty(const Partition& mu, const Composition& a) {
    detail::require_same_total(mu, a);
    return dominates(mu, sort_to_partition(a));
}

/// B(mu, a): every rho of |mu| - a_h with mu/rho a horizontal strip and
/// rho dominating lambda(a'). Returned in decreasing lexicographic order.
inline std::vector<Partition> candidate_partitions(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    const Part target = mu.total() - a.last();
    const Partition lambda_rest = sort_to_partition(drop_last(a));
    const std::size_t k = mu.height();

    std::vector<Partition> out;
    std::vector<Part> rho(k, 0);
    auto scan = [&](auto&& self, std::size_t i, Part sum) -> void {
        if (i > k) {
            if (sum != target)
                return;
            std::vector<Part> parts(rho.begin(), rho.end());
            while (!parts.empty() && parts.back() == 0)
                parts.pop_back();
            Partition p(std::move(parts));
            if (dominates(p, lambda_rest))
                out.push_back(std::move(p));
            return;
        }
        for (Part v = mu.part(i); v >= mu.part(i + 1); --v) {
            rho[i - 1] = v;
            self(self, i + 1, sum + v);
        }
    };
    scan(scan, 1, 0);
    return out;
}

/// rho(mu, a): keep rows above s = s(mu, a), shorten row s so that
/// mu/rho holds a_h cells, and shift the rows below s up by one.
inline Partition rho(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    const std::size_t s = s_index(mu, a);
    const std::size_t k = mu.height();
    std::vector<Part> parts;
    parts.reserve(k);
    for (std::size_t i = 1; i < s; ++i)
        parts.push_back(mu.part(i));
    parts.push_back(mu.part(s) - (a.last() - mu.part(s + 1)));
    for (std::size_t i = s + 1; i < k; ++i)
        parts.push_back(mu.part(i + 1));
    if (parts[s - 1] == 0)
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(s - 1));
    return Partition(std::move(parts));
}

/// R(mu, a), ascending: rows i with mu_i > mu_{i+1} and
/// mu^(i) dominating lambda(tilde(a)).
inline std::vector<std::size_t> removable_set(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    std::vector<std::size_t> out;
    if (a.empty())
        return out;
    const Partition target = sort_to_partition(tilde(a));
    for (std::size_t i = 1; i <= mu.height(); ++i)
        if (mu.part(i) > mu.part(i + 1) && dominates(decrement_part(mu, i), target))
            out.push_back(i);
    return out;
}

/// l(mu, a, i) = min{r in R(mu, a) : r >= i}.
inline std::size_t l_min_from(const Partition& mu, const Composition& a, std::size_t i) {
    if (i < 1 || i > mu.height())
        throw Error(ErrorCode::NoSuchIndex, "row " + std::to_string(i) + " is outside 1.." +
                                                std::to_string(mu.height()));
    for (std::size_t r : removable_set(mu, a))
        if (r >= i)
            return r;
    throw Error(ErrorCode::NoSuchIndex, "no removable row at or below " + std::to_string(i));
}

/// l(mu, a) = min R(mu, a).
inline std::size_t l_min(const Partition& mu, const Composition& a) {
    return l_min_from(mu, a, 1);
}

// ---------------------------------------------------------------------------

inline TracedTableau greatest_tableau_traced(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    auto grid = detail::empty_grid(mu);
    std::vector<TraceRecord> trace;
    Partition nu = mu;
    Composition b = a;
    std::size_t step = 1;
    while (b.height() > 1) {
        Partition next = rho(nu, b);
        auto log = detail::fill_skew(grid, nu, next, static_cast<Part>(b.height()));
        trace.push_back({step++, nu, b, next, std::nullopt, std::nullopt, std::move(log)});
        nu = std::move(next);
        b = drop_last(b);
    }
    if (!nu.empty())
        trace.push_back({step, nu, b, std::nullopt, std::nullopt, std::nullopt,
                         detail::fill_first_row(grid, nu)});
    return {Tableau(mu, std::move(grid)), std::move(trace)};
}

/// The greatest element of STab(mu, a).
inline Tableau greatest_tableau(const Partition& mu, const Composition& a) {
    return greatest_tableau_traced(mu, a).tableau;
}

inline TracedTableau removable_fill_tableau_traced(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    auto grid = detail::empty_grid(mu);
    std::vector<TraceRecord> trace;
    Partition nu = mu;
    Composition b = a;
    std::size_t step = 1;
    while (b.height() > 1) {
        const std::size_t l = l_min(nu, b);
        const Partition shortened = decrement_part(nu, l);
        Partition next = b.last() == 1 ? shortened : rho(shortened, tilde(b));
        auto log = detail::fill_skew(grid, nu, next, static_cast<Part>(b.height()));
        trace.push_back({step++, nu, b, next, l, std::nullopt, std::move(log)});
        nu = std::move(next);
        b = drop_last(b);
    }
    if (!nu.empty())
        trace.push_back({step, nu, b, std::nullopt, std::nullopt, std::nullopt,
                         detail::fill_first_row(grid, nu)});
    return {Tableau(mu, std::move(grid)), std::move(trace)};
}

/// A tableau of STab(mu, a) whose largest value starts in row l(mu, a).
inline Tableau removable_fill_tableau(const Partition& mu, const Composition& a) {
    return removable_fill_tableau_traced(mu, a).tableau;
}

// ---------------------------------------------------------------------------

namespace detail {

/// A = {a_h, a_h + a_{h-1}, ..., a_h + ... + a_2}.
inline std::vector<Part> reset_points(const Composition& a) {
    std::vector<Part> out;
    Part acc = 0;
    for (std::size_t j = a.height(); j >= 2; --j) {
        acc += a.part(j);
        out.push_back(acc);
    }
    return out;
}

/// Runs the removal sequence starting from `first_floor`. Each step removes
/// the corner in row l(mu^i, a^i, floor); the floor drops back to 1 whenever a
/// value has been used up, otherwise it stays at the last removed row.
inline LeastTrace least_sequences(const Partition& mu, const Composition& a,
                                  std::size_t first_floor) {
    LeastTrace seq;
    seq.reset_set = reset_points(a);
    const auto n = static_cast<std::size_t>(mu.total());
    seq.a_seq.reserve(n + 1);
    seq.mu_seq.reserve(n + 1);
    seq.a_seq.push_back(a);
    seq.mu_seq.push_back(mu);
    std::size_t prev = first_floor;
    for (std::size_t i = 0; i < n; ++i) {
        const bool reset = std::find(seq.reset_set.begin(), seq.reset_set.end(),
                                     static_cast<Part>(i)) != seq.reset_set.end();
        const std::size_t floor = reset ? 1 : prev;
        const std::size_t l = l_min_from(seq.mu_seq[i], seq.a_seq[i], floor);
        seq.floors.push_back(floor);
        seq.l_seq.push_back(l);
        seq.mu_seq.push_back(decrement_part(seq.mu_seq[i], l));
        seq.a_seq.push_back(tilde(seq.a_seq[i]));
        prev = l;
    }
    return seq;
}

inline TracedTableau least_from_sequences(const Partition& mu, const Composition& a,
                                          const LeastTrace& seq) {
    const auto n = static_cast<Part>(mu.total());
    // prefix[t] = a_1 + ... + a_t, strictly increasing
    std::vector<Part> prefix(a.height() + 1, 0);
    for (std::size_t t = 1; t <= a.height(); ++t)
        prefix[t] = prefix[t - 1] + a.part(t);

    auto grid = empty_grid(mu);
    std::vector<TraceRecord> trace;
    for (std::size_t i = 0; i < seq.l_seq.size(); ++i) {
        const Part remaining = n - static_cast<Part>(i);
        const auto t = static_cast<Part>(
            std::lower_bound(prefix.begin(), prefix.end(), remaining) - prefix.begin());
        const std::size_t row = seq.l_seq[i];
        const auto col = static_cast<std::size_t>(seq.mu_seq[i].part(row));
        std::vector<Assignment> log;
        assign(grid, log, row, col, t);
        const bool last = i + 1 == seq.l_seq.size();
        trace.push_back({i + 1, seq.mu_seq[i], seq.a_seq[i], std::nullopt,
                         last ? std::nullopt : std::optional<std::size_t>(row), seq.floors[i],
                         std::move(log)});
    }
    return {Tableau(mu, std::move(grid)), std::move(trace)};
}

inline void require_floor(const Partition& mu, const Composition& a, std::size_t r) {
    require_dominating(mu, a);
    const auto removable = removable_set(mu, a);
    if (std::find(removable.begin(), removable.end(), r) == removable.end())
        throw Error(ErrorCode::InvalidFloor,
                    "row " + std::to_string(r) + " is not removable for the pair");
    if (r > s_index(mu, a))
        throw Error(ErrorCode::InvalidFloor, "row " + std::to_string(r) + " lies below s(mu,a)=" +
                                                 std::to_string(s_index(mu, a)));
}

} // namespace detail

/// Least element of {T in STab(mu, a) : min{i : T(i, mu_i) = h} >= r}.
/// Requires r in R(mu, a) and r <= s(mu, a).
inline TracedTableau least_tableau_with_floor_traced(const Partition& mu, const Composition& a,
                                                     std::size_t r) {
    detail::require_floor(mu, a, r);
    return detail::least_from_sequences(mu, a, detail::least_sequences(mu, a, r));
}

inline Tableau least_tableau_with_floor(const Partition& mu, const Composition& a,
                                        std::size_t r) {
    return least_tableau_with_floor_traced(mu, a, r).tableau;
}

/// The sequences a^i, l_i, mu^i for the floor r (validated as above).
inline LeastTrace least_trace(const Partition& mu, const Composition& a, std::size_t r) {
    detail::require_floor(mu, a, r);
    return detail::least_sequences(mu, a, r);
}

/// The least element of STab(mu, a). This is the floor r = l(mu, a) case;
/// starting the scan at floor 1 selects the same first row.
inline TracedTableau least_tableau_traced(const Partition& mu, const Composition& a) {
    detail::require_dominating(mu, a);
    if (mu.empty())
        return {};
    return detail::least_from_sequences(mu, a, detail::least_sequences(mu, a, 1));
}

inline Tableau least_tableau(const Partition& mu, const Composition& a) {
    return least_tableau_traced(mu, a).tableau;
}

} // namespace tableaux
