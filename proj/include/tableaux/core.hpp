#pragma once

// Partitions, compositions and the dominance order.
//
// All indices exposed here are 1-based. Reading a part beyond the length of a
// sequence yields 0. Sequences never carry trailing zeros; the empty sequence
// is the unique partition (and composition) of 0.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/error.hpp"

namespace tableaux {

using Part = std::int64_t;

namespace detail {

inline Part checked_add(Part x, Part y) {
    Part r{};
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "sum of parts exceeds the 64-bit range");
    return r;
}

inline Part checked_total(std::span<const Part> parts) {
    Part total = 0;
    for (Part p : parts)
        total = checked_add(total, p);
    return total;
}

inline std::string join(std::span<const Part> parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

inline void require_positive(std::span<const Part> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] < 1)
            throw Error(ErrorCode::InvalidSequence,
                        "part " + std::to_string(i + 1) + " is " + std::to_string(parts[i]) +
                            ", parts must be positive");
}

} // namespace detail

/// A finite sequence of positive integers (a composition of its total).
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<Part> parts)
        : parts_(std::move(parts))
    {
        detail::require_positive(parts_);
        total_ = detail::checked_total(parts_);
    }

    Composition(std::initializer_list<Part> parts)
        : Composition(std::vector<Part>(parts))
    {}

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t height() const noexcept { return parts_.size(); }
    Part total() const noexcept { return total_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// a_i for 1-based i; 0 when i exceeds the height.
    Part part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    Part last() const {
        if (parts_.empty())
            throw Error(ErrorCode::NoSuchIndex, "the empty composition has no last part");
        return parts_.back();
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& x, const Composition& y) {
        return x.parts_ <=> y.parts_;
    }

private:
    std::vector<Part> parts_;
    Part total_ = 0;
};

/// A non-increasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Part> parts)
        : parts_(std::move(parts))
    {
        detail::require_positive(parts_);
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw Error(ErrorCode::InvalidSequence,
                            "partition must be non-increasing: " + detail::join(parts_));
        total_ = detail::checked_total(parts_);
    }

    Partition(std::initializer_list<Part> parts)
        : Partition(std::vector<Part>(parts))
    {}

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t height() const noexcept { return parts_.size(); }
    Part total() const noexcept { return total_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// mu_i for 1-based i; 0 when i exceeds the number of parts.
    Part part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;
    }

private:
    std::vector<Part> parts_;
    Part total_ = 0;
};

template <class S>
concept PartSequence = requires(const S& s) {
    { s.parts() } -> std::convertible_to<const std::vector<Part>&>;
    { s.height() } -> std::convertible_to<std::size_t>;
};

/// Parenthesised rendering, e.g. "(4,4,1,1)"; used by traces and test output.
template <PartSequence S>
std::ostream& operator<<(std::ostream& os, const S& s) {
    return os << '(' << detail::join(s.parts()) << ')';
}

// ---------------------------------------------------------------------------

/// lambda(a): the parts of a rearranged in non-increasing order.
inline Partition sort_to_partition(const Composition& a) {
    std::vector<Part> parts = a.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

/// x dominates y: height(y) >= height(x) and every partial sum of x up to
/// height(x) is at least the matching partial sum of y.
///
/// The length condition is taken literally, so this also applies to
/// compositions. For two partitions of the same total it coincides with the
/// classical dominance order.
template <PartSequence X, PartSequence Y>
bool dominates(const X& x, const Y& y) {
    const std::size_t h = x.height();
    if (y.height() < h)
        return false;
    Part sx = 0, sy = 0;
    for (std::size_t j = 1; j <= h; ++j) {
        sx = detail::checked_add(sx, x.part(j));
        sy = detail::checked_add(sy, y.part(j));
        if (sx < sy)
            return false;
    }
    return true;
}

template <PartSequence X, PartSequence Y>
bool strictly_dominates(const X& x, const Y& y) {
    return dominates(x, y) && x.parts() != y.parts();
}

namespace detail {

inline std::vector<Part> decrement_parts(const std::vector<Part>& parts, std::size_t i) {
    if (i < 1 || i > parts.size())
        throw Error(ErrorCode::NoSuchIndex, "cannot decrement part " + std::to_string(i) +
                                                " of a sequence with " +
                                                std::to_string(parts.size()) + " parts");
    std::vector<Part> out = parts;
    if (--out[i - 1] == 0) {
        if (i != out.size())
            throw Error(ErrorCode::InvalidSequence,
                        "decrementing part " + std::to_string(i) + " leaves an interior zero");
        out.pop_back();
    }
    return out;
}

} // namespace detail

/// mu^(i). A resulting zero part is dropped.
inline Partition decrement_part(const Partition& mu, std::size_t i) {
    auto parts = detail::decrement_parts(mu.parts(), i);
    if (i < parts.size() && parts[i - 1] < parts[i])
        throw Error(ErrorCode::InvalidSequence,
                    "decrementing row " + std::to_string(i) + " of " + detail::join(mu.parts()) +
                        " breaks the non-increasing order");
    return Partition(std::move(parts));
}

/// a^(i). Only the last part may drop to zero (and is then removed).
inline Composition decrement_part(const Composition& a, std::size_t i) {
    return Composition(detail::decrement_parts(a.parts(), i));
}

/// a' = (a_1, ..., a_{h-1}).
inline Composition drop_last(const Composition& a) {
    if (a.empty())
        throw Error(ErrorCode::NoSuchIndex, "the empty composition has no last part");
    return Composition(std::vector<Part>(a.parts().begin(), a.parts().end() - 1));
}

/// a with its last part decremented (removed when it was 1).
inline Composition tilde(const Composition& a) {
    return decrement_part(a, a.height());
}

/// q(a) = max{i : lambda(a)_i = a_h}.
inline std::size_t q_index(const Composition& a) {
    const Part last = a.last();
    const Partition lambda = sort_to_partition(a);
    std::size_t q = 0;
    for (std::size_t i = 1; i <= lambda.height(); ++i)
        if (lambda.part(i) == last)
            q = i;
    return q;
}

/// lambda(a)^(q(a)); equals sort_to_partition(tilde(a)).
inline Partition tilde_lambda(const Composition& a) {
    return decrement_part(sort_to_partition(a), q_index(a));
}

/// s(mu, a) = max{i : mu_i >= a_h}.
inline std::size_t s_index(const Partition& mu, const Composition& a) {
    const Part last = a.last();
    std::size_t s = 0;
    for (std::size_t i = 1; i <= mu.height() && mu.part(i) >= last; ++i)
        s = i;
    if (s == 0)
        throw Error(ErrorCode::NoSuchIndex, "no row of " + detail::join(mu.parts()) +
                                                " has length >= " + std::to_string(last));
    return s;
}

/// rho is contained in mu (rho fits inside mu row by row).
inline bool contains(const Partition& rho, const Partition& mu) {
    if (rho.height() > mu.height())
        return false;
    for (std::size_t i = 1; i <= rho.height(); ++i)
        if (rho.part(i) > mu.part(i))
            return false;
    return true;
}

/// mu/rho is a horizontal strip: rho_i >= mu_{i+1} for every i >= 1, with
/// rho read as zero-padded (so mu may extend rho by at most one row).
inline bool is_totally_disconnected(const Partition& mu, const Partition& rho) {
    if (!contains(rho, mu))
        throw Error(ErrorCode::NotContained, detail::join(rho.parts()) + " is not contained in " +
                                                 detail::join(mu.parts()));
    for (std::size_t i = 1; i <= rho.height(); ++i)
        if (rho.part(i) < mu.part(i + 1))
            return false;
    return mu.part(rho.height() + 2) == 0;
}

} // namespace tableaux
