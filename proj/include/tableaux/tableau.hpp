#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/core.hpp"
#include "tableaux/error.hpp"

namespace tableaux {

using Row = std::vector<Part>;

/// A filling of the Young diagram of `shape` with positive integers, stored
/// row by row. Entries are addressed with 1-based (row, column).
class Tableau {
public:
    Tableau() = default;

    Tableau(Partition shape, std::vector<Row> rows)
        : shape_(std::move(shape))
        , rows_(std::move(rows))
    {
        if (rows_.size() != shape_.height())
            throw Error(ErrorCode::ShapeMismatch, "tableau has " + std::to_string(rows_.size()) +
                                                      " rows, shape has " +
                                                      std::to_string(shape_.height()));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<Part>(rows_[i].size()) != shape_.part(i + 1))
                throw Error(ErrorCode::ShapeMismatch,
                            "row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows_[i].size()) + " entries, shape wants " +
                                std::to_string(shape_.part(i + 1)));
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i][j] < 1)
                    throw Error(ErrorCode::InvalidSequence,
                                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is not a positive integer");
        }
    }

    /// Shape inferred from the row lengths (which must be non-increasing and
    /// non-zero).
    static Tableau from_rows(std::vector<Row> rows) {
        std::vector<Part> lengths;
        lengths.reserve(rows.size());
        for (const Row& r : rows)
            lengths.push_back(static_cast<Part>(r.size()));
        return Tableau(Partition(std::move(lengths)), std::move(rows));
    }

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    Part at(std::size_t row, std::size_t col) const { return rows_.at(row - 1).at(col - 1); }

    Part max_entry() const noexcept {
        Part m = 0;
        for (const Row& r : rows_)
            for (Part v : r)
                m = std::max(m, v);
        return m;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<Row> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) {
    os << '[';
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j)
            os << (j ? "," : "") << t.rows()[i][j];
        os << ']';
    }
    return os << ']';
}

enum class ComparisonResult { Less, Equal, Greater, Incomparable };

inline std::string_view to_string(ComparisonResult c) noexcept {
    switch (c) {
    case ComparisonResult::Less: return "Less";
    case ComparisonResult::Equal: return "Equal";
    case ComparisonResult::Greater: return "Greater";
    case ComparisonResult::Incomparable: return "Incomparable";
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, ComparisonResult c) { return os << to_string(c); }

/// Rows weakly increase, columns strictly increase.
inline bool is_semistandard(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
            if (rows[i][j] > rows[i][j + 1])
                return false;
        if (i + 1 < rows.size())
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
                if (rows[i][j] >= rows[i + 1][j])
                    return false;
    }
    return true;
}

/// Occurrence counts of the values 1..max entry.
inline Composition weight(const Tableau& t) {
    std::vector<Part> counts(static_cast<std::size_t>(t.max_entry()), 0);
    for (const Row& r : t.rows())
        for (Part v : r)
            ++counts[static_cast<std::size_t>(v - 1)];
    for (std::size_t v = 0; v < counts.size(); ++v)
        if (counts[v] == 0)
            throw Error(ErrorCode::ZeroCount,
                        "value " + std::to_string(v + 1) + " does not occur in the tableau");
    return Composition(std::move(counts));
}

/// Membership test for STab(mu, a).
inline bool validate(const Tableau& t, const Partition& mu, const Composition& a) {
    if (t.shape() != mu)
        throw Error(ErrorCode::ShapeMismatch,
                    "tableau shape " + detail::join(t.shape().parts()) + " is not " +
                        detail::join(mu.parts()));
    if (!is_semistandard(t))
        return false;
    if (t.max_entry() != static_cast<Part>(a.height()))
        return false;
    std::vector<Part> counts(a.height(), 0);
    for (const Row& r : t.rows())
        for (Part v : r)
            ++counts[static_cast<std::size_t>(v - 1)];
    return counts == a.parts();
}

/// Row counts of entries <= p. For a semistandard tableau this is a partition.
inline Partition cumulative_shape(const Tableau& t, Part p) {
    std::vector<Part> counts;
    for (const Row& r : t.rows()) {
        auto c = static_cast<Part>(std::upper_bound(r.begin(), r.end(), p) - r.begin());
        if (c == 0)
            break;
        counts.push_back(c);
    }
    return Partition(std::move(counts));
}

/// min{i : T(i, mu_i) = h}, the topmost row ending in the largest entry.
inline std::size_t top_max_row(const Tableau& t) {
    const Part h = t.max_entry();
    for (std::size_t i = 0; i < t.rows().size(); ++i)
        if (!t.rows()[i].empty() && t.rows()[i].back() == h)
            return i + 1;
    throw Error(ErrorCode::NoSuchIndex, "the empty tableau has no largest entry");
}

namespace detail {

inline void require_same_poset(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape())
        throw Error(ErrorCode::MixedPoset, "tableaux have different shapes");
    if (weight(s) != weight(t))
        throw Error(ErrorCode::MixedPoset, "tableaux have different weights");
}

inline ComparisonResult compare_shapes(const Partition& sigma, const Partition& tau) {
    if (sigma == tau)
        return ComparisonResult::Equal;
    if (dominates(tau, sigma))
        return ComparisonResult::Less;
    if (dominates(sigma, tau))
        return ComparisonResult::Greater;
    return ComparisonResult::Incomparable;
}

} // namespace detail

/// Order on STab(mu, a): scan the levels p = h, h-1, ..., 1 and decide at the
/// first level where the cumulative shapes differ. Less means s < t.
inline ComparisonResult compare(const Tableau& s, const Tableau& t) {
    detail::require_same_poset(s, t);
    for (Part p = s.max_entry(); p >= 1; --p) {
        const auto c = detail::compare_shapes(cumulative_shape(s, p), cumulative_shape(t, p));
        if (c != ComparisonResult::Equal)
            return c;
    }
    return ComparisonResult::Equal;
}

namespace detail {

inline Tableau strip_largest(const Tableau& t, Part h) {
    std::vector<Row> rows;
    for (const Row& r : t.rows()) {
        Row kept;
        for (Part v : r)
            if (v < h)
                kept.push_back(v);
        if (kept.empty())
            break;
        rows.push_back(std::move(kept));
    }
    return Tableau::from_rows(std::move(rows));
}

inline ComparisonResult compare_recursive_impl(const Tableau& s, const Tableau& t, Part h) {
    if (h <= 1)
        return ComparisonResult::Equal;
    Tableau s_rest = strip_largest(s, h);
    Tableau t_rest = strip_largest(t, h);
    const auto c = compare_shapes(s_rest.shape(), t_rest.shape());
    if (c != ComparisonResult::Equal)
        return c;
    return compare_recursive_impl(s_rest, t_rest, h - 1);
}

} // namespace detail

/// Same order as compare(), evaluated by the recursive rule: remove the
/// largest value, compare the remaining shapes, recurse when they agree.
inline ComparisonResult compare_recursive(const Tableau& s, const Tableau& t) {
    detail::require_same_poset(s, t);
    return detail::compare_recursive_impl(s, t, s.max_entry());
}

} // namespace tableaux
