#pragma once

// Exhaustive cross-checks of the constructions against brute-force
// enumeration, over every partition mu and composition a of n <= max_n.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tableaux/algorithms.hpp"
#include "tableaux/core.hpp"
#include "tableaux/enumeration.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string failure;  // first counterexample
};

namespace detail {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void count() { ++result_.cases; }

    void expect(bool ok, const std::function<std::string()>& describe) {
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.failure = describe();
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

template <class T>
std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

inline std::string show_pair(const Partition& mu, const Composition& a) {
    return "mu=" + show(mu) + " a=" + show(a);
}

template <class F>
void for_each_pair(Part max_n, F&& f) {
    for (Part n = 1; n <= max_n; ++n) {
        const auto compositions = compositions_of(n);
        for (const Partition& mu : partitions_of(n))
            for (const Composition& a : compositions)
                f(mu, a);
    }
}

template <class F>
void for_each_dominating_pair(Part max_n, F&& f) {
    for_each_pair(max_n, [&](const Partition& mu, const Composition& a) {
        if (dominates(mu, sort_to_partition(a)))
            f(mu, a);
    });
}

/// Index of the element below or equal to every other one, if any.
inline std::optional<std::size_t> compare_minimum(const std::vector<Tableau>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < elements.size() && below_all; ++j) {
            const auto c = compare(elements[i], elements[j]);
            below_all = c == ComparisonResult::Less || c == ComparisonResult::Equal;
        }
        if (below_all)
            return i;
    }
    return std::nullopt;
}

} // namespace detail

/// STab(mu, a) is nonempty exactly when mu dominates lambda(a).
inline CheckResult check_nonemptiness(Part max_n) {
    detail::Recorder rec("nonemptiness <=> mu dominates lambda(a)");
    detail::for_each_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const bool nonempty = !enumerate_tableaux(mu, a, max_n).empty();
        rec.expect(nonempty == dominates(mu, sort_to_partition(a)) &&
                       nonempty == is_nonempty(mu, a),
                   [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// The poset has a unique maximum and minimum, and they are the constructed ones.
inline CheckResult check_extremes(Part max_n) {
    detail::Recorder rec("poset extremes equal greatest_tableau / least_tableau");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const PosetSummary poset = build_poset(mu, a, max_n);
        const Tableau g = greatest_tableau(mu, a);
        const Tableau l = least_tableau(mu, a);
        rec.expect(poset.greatest && poset.least && poset.elements[*poset.greatest] == g &&
                       poset.elements[*poset.least] == l && validate(g, mu, a) &&
                       validate(l, mu, a),
                   [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// A witness with h in box (r, mu_r) exists iff r is removable.
inline CheckResult check_removable_oracle(Part max_n) {
    detail::Recorder rec("removable_oracle <=> r in removable_set");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        const auto removable = removable_set(mu, a);
        for (std::size_t r = 1; r <= mu.height(); ++r) {
            rec.count();
            const bool listed = std::find(removable.begin(), removable.end(), r) != removable.end();
            rec.expect(removable_oracle(mu, a, r, max_n) == listed,
                       [&] { return detail::show_pair(mu, a) + " r=" + std::to_string(r); });
        }
    });
    return rec.take();
}

/// R(mu, a) is every corner row from l(mu, a) down, and contains s(mu, a).
inline CheckResult check_interval_characterization(Part max_n) {
    detail::Recorder rec("removable_set = corners in [l_min, k], s_index in it");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const auto removable = removable_set(mu, a);
        const std::size_t l = l_min(mu, a);
        std::vector<std::size_t> interval;
        for (std::size_t i = l; i <= mu.height(); ++i)
            if (mu.part(i) > mu.part(i + 1))
                interval.push_back(i);
        const std::size_t s = s_index(mu, a);
        rec.expect(removable == interval &&
                       std::find(removable.begin(), removable.end(), s) != removable.end(),
                   [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// rho(mu, a) belongs to B(mu, a) and dominates all of it.
inline CheckResult check_rho_greatest(Part max_n) {
    detail::Recorder rec("rho(mu,a) is the greatest element of B(mu,a)");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const Partition r = rho(mu, a);
        const auto candidates = candidate_partitions(mu, a);
        bool ok = std::find(candidates.begin(), candidates.end(), r) != candidates.end();
        for (const Partition& c : candidates)
            ok = ok && dominates(r, c);
        rec.expect(ok, [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// Floor-restricted least element equals the brute-force minimum of the
/// filtered enumeration.
inline CheckResult check_floor_least(Part max_n) {
    detail::Recorder rec("least_tableau_with_floor = minimum of filtered STab");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        const auto all = enumerate_tableaux(mu, a, max_n);
        const std::size_t s = s_index(mu, a);
        for (std::size_t r : removable_set(mu, a)) {
            if (r > s)
                continue;
            rec.count();
            std::vector<Tableau> filtered;
            for (const Tableau& t : all)
                if (top_max_row(t) >= r)
                    filtered.push_back(t);
            const auto minimum = detail::compare_minimum(filtered);
            const Tableau built = least_tableau_with_floor(mu, a, r);
            rec.expect(minimum && filtered[*minimum] == built,
                       [&] { return detail::show_pair(mu, a) + " r=" + std::to_string(r); });
        }
    });
    return rec.take();
}

/// The level-scan order and the recursive order agree; lambda(tilde(a)) is
/// lambda(a) with part q(a) decremented.
inline CheckResult check_definition_equivalences(Part max_n) {
    detail::Recorder rec("compare = compare_recursive; tilde_lambda = lambda(tilde)");
    for (Part n = 1; n <= max_n; ++n)
        for (const Composition& a : compositions_of(n)) {
            rec.count();
            rec.expect(tilde_lambda(a) == sort_to_partition(tilde(a)),
                       [&] { return "a=" + detail::show(a); });
        }
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        const auto all = enumerate_tableaux(mu, a, max_n);
        for (const Tableau& s : all)
            for (const Tableau& t : all) {
                rec.count();
                rec.expect(compare(s, t) == compare_recursive(s, t), [&] {
                    return detail::show_pair(mu, a) + " S=" + detail::show(s) +
                           " T=" + detail::show(t);
                });
            }
    });
    return rec.take();
}

/// kostka(mu, a) = kostka(mu, lambda(a)).
inline CheckResult check_kostka_invariance(Part max_n) {
    detail::Recorder rec("kostka(mu,a) = kostka(mu,lambda(a))");
    detail::for_each_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        rec.expect(kostka(mu, a, max_n) == kostka(mu, sort_to_partition(a).as_composition(), max_n),
                   [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// Dominance is a partial order on partitions of n.
inline CheckResult check_dominance_order(Part max_n) {
    detail::Recorder rec("dominance is a partial order on partitions of n");
    for (Part n = 1; n <= max_n; ++n) {
        const auto ps = partitions_of(n);
        for (const Partition& x : ps)
            for (const Partition& y : ps) {
                rec.count();
                rec.expect(dominates(x, x), [&] { return detail::show(x); });
                rec.expect(!(dominates(x, y) && dominates(y, x)) || x == y,
                           [&] { return detail::show(x) + " " + detail::show(y); });
                if (!dominates(x, y))
                    continue;
                for (const Partition& z : ps)
                    rec.expect(!dominates(y, z) || dominates(x, z), [&] {
                        return detail::show(x) + " " + detail::show(y) + " " + detail::show(z);
                    });
            }
    }
    return rec.take();
}

/// compare is antisymmetric, transitive, and Less/Greater are mirror images.
inline CheckResult check_poset_axioms(Part max_n) {
    detail::Recorder rec("compare is a partial order on STab(mu,a)");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const auto all = enumerate_tableaux(mu, a, max_n);
        const std::size_t m = all.size();
        std::vector<std::vector<ComparisonResult>> table(m, std::vector<ComparisonResult>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                table[i][j] = compare(all[i], all[j]);
        auto mirror = [](ComparisonResult c) {
            switch (c) {
            case ComparisonResult::Less: return ComparisonResult::Greater;
            case ComparisonResult::Greater: return ComparisonResult::Less;
            default: return c;
            }
        };
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                ok = ok && table[j][i] == mirror(table[i][j]);
                ok = ok && ((table[i][j] == ComparisonResult::Equal) == (i == j));
                if (table[i][j] != ComparisonResult::Less)
                    continue;
                for (std::size_t x = 0; x < m; ++x)
                    if (table[j][x] == ComparisonResult::Less)
                        ok = ok && table[i][x] == ComparisonResult::Less;
            }
        rec.expect(ok, [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// l(mu,a) <= top row holding h <= s(mu,a) for every T; the greatest element
/// attains s and the removable fill attains l.
inline CheckResult check_corner_bounds(Part max_n) {
    detail::Recorder rec("l_min <= top_max_row(T) <= s_index, both attained");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const std::size_t l = l_min(mu, a);
        const std::size_t s = s_index(mu, a);
        bool ok = top_max_row(greatest_tableau(mu, a)) == s;
        const Tableau u = removable_fill_tableau(mu, a);
        ok = ok && validate(u, mu, a) && top_max_row(u) == l;
        for (const Tableau& t : enumerate_tableaux(mu, a, max_n)) {
            const std::size_t top = top_max_row(t);
            ok = ok && l <= top && top <= s;
        }
        rec.expect(ok, [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// Rows holding h, sorted, dominate the l-sequence componentwise whenever
/// all of them lie at or below the floor r.
inline CheckResult check_monotone_floor(Part max_n) {
    detail::Recorder rec("sorted rows of h-cells >= l_1..l_{a_h}");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        const auto all = enumerate_tableaux(mu, a, max_n);
        const auto h = static_cast<Part>(a.height());
        const std::size_t s = s_index(mu, a);
        for (std::size_t r : removable_set(mu, a)) {
            if (r > s)
                continue;
            const LeastTrace seq = least_trace(mu, a, r);
            for (const Tableau& t : all) {
                std::vector<std::size_t> rows;
                for (std::size_t i = 0; i < t.rows().size(); ++i)
                    for (Part v : t.rows()[i])
                        if (v == h)
                            rows.push_back(i + 1);
                if (rows.front() < r)
                    continue;
                rec.count();
                bool ok = true;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    ok = ok && seq.l_seq[i] <= rows[i];
                rec.expect(ok, [&] {
                    return detail::show_pair(mu, a) + " r=" + std::to_string(r) +
                           " T=" + detail::show(t);
                });
            }
        }
    });
    return rec.take();
}

/// Enumeration is duplicate-free, every member validates, and the count
/// matches kostka().
inline CheckResult check_enumeration_sound(Part max_n) {
    detail::Recorder rec("enumeration duplicate-free, valid, sized by kostka");
    detail::for_each_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        auto all = enumerate_tableaux(mu, a, max_n);
        bool ok = all.size() == kostka(mu, a, max_n);
        for (const Tableau& t : all)
            ok = ok && validate(t, mu, a);
        for (std::size_t i = 1; i < all.size(); ++i)
            ok = ok && all[i - 1].rows() < all[i].rows();
        rec.expect(ok, [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// For mu_p > mu_{p+1}, lam_q > lam_{q+1} and mu dominating lam:
/// mu^(p) dominates lam^(q) iff p >= q or the partial sums of mu are strictly
/// larger on [p, q).
inline CheckResult check_decrement_criterion(Part max_n) {
    detail::Recorder rec("decrement dominance criterion");
    for (Part n = 1; n <= max_n; ++n) {
        const auto ps = partitions_of(n);
        for (const Partition& mu : ps)
            for (const Partition& lam : ps) {
                if (!dominates(mu, lam))
                    continue;
                for (std::size_t p = 1; p <= mu.height(); ++p) {
                    if (mu.part(p) <= mu.part(p + 1))
                        continue;
                    for (std::size_t q = 1; q <= lam.height(); ++q) {
                        if (lam.part(q) <= lam.part(q + 1))
                            continue;
                        rec.count();
                        bool criterion = p >= q;
                        if (!criterion) {
                            criterion = true;
                            Part sm = 0, sl = 0;
                            for (std::size_t j = 1; j < q; ++j) {
                                sm += mu.part(j);
                                sl += lam.part(j);
                                if (j >= p && sm <= sl)
                                    criterion = false;
                            }
                        }
                        const bool direct = dominates(decrement_part(mu, p), decrement_part(lam, q));
                        rec.expect(direct == criterion, [&] {
                            return detail::show(mu) + " " + detail::show(lam) + " p=" +
                                   std::to_string(p) + " q=" + std::to_string(q);
                        });
                    }
                }
            }
    }
    return rec.take();
}

/// q(a) and s(mu,a) sit exactly at the last row of their plateau.
inline CheckResult check_index_identities(Part max_n) {
    detail::Recorder rec("q_index / s_index boundary identities");
    detail::for_each_dominating_pair(max_n, [&](const Partition& mu, const Composition& a) {
        rec.count();
        const Partition lambda = sort_to_partition(a);
        const std::size_t q = q_index(a);
        const std::size_t s = s_index(mu, a);
        rec.expect(lambda.part(q) == a.last() && a.last() > lambda.part(q + 1) &&
                       mu.part(s) >= a.last() && a.last() > mu.part(s + 1),
                   [&] { return detail::show_pair(mu, a); });
    });
    return rec.take();
}

/// Every check above, each run up to max_n.
inline std::vector<CheckResult> run_verification(Part max_n) {
    return {
        check_dominance_order(max_n),
        check_decrement_criterion(max_n),
        check_index_identities(max_n),
        check_enumeration_sound(max_n),
        check_nonemptiness(max_n),
        check_extremes(max_n),
        check_removable_oracle(max_n),
        check_interval_characterization(max_n),
        check_rho_greatest(max_n),
        check_floor_least(max_n),
        check_definition_equivalences(max_n),
        check_kostka_invariance(max_n),
        check_poset_axioms(max_n),
        check_corner_bounds(max_n),
        check_monotone_floor(max_n),
    };
}

} // namespace tableaux
