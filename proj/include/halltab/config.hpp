#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/numeric.hpp"

namespace halltab {

/**
 * A rank demand per member, relative to a fixed transversal t: demand(i)
 * asks that the word value at t(member i) be the demand(i)-th smallest
 * value taken on member i.  Valid range 1..|member i| is family-dependent
 * and checked by validate_configuration.
 */
class configuration {
public:
    explicit configuration(std::vector<int> demands) : demands_(std::move(demands)) {
        for (int d : demands_)
            if (d < 1) throw invalid_input("configuration: demands must be positive");
    }

    int size() const { return static_cast<int>(demands_.size()); }

    /** Demand for the member with the given 1-based index. */
    int at(int member_index) const {
        if (member_index < 1 || member_index > size())
            throw invalid_input("configuration: member index out of range");
        return demands_[static_cast<std::size_t>(member_index - 1)];
    }

    const std::vector<int>& demands() const { return demands_; }

    bool operator==(const configuration& other) const = default;

private:
    std::vector<int> demands_;
};

/** Throws invalid_input unless f has one demand per member of fam, each
 *  within 1..|member|. */
inline void validate_configuration(const set_family& fam, const configuration& f) {
    if (f.size() != fam.member_count())
        throw invalid_input("configuration: demand count differs from member count");
    for (int i = 1; i <= fam.member_count(); ++i)
        if (f.at(i) > static_cast<int>(fam.member(i).size()))
            throw invalid_input("configuration: demand exceeds member size");
}

/**
 * A surjective map [n] -> [m], stored as the value vector (position i holds
 * the image of i).  Construction enforces 1 <= value <= m and surjectivity.
 */
class surjective_word {
public:
    surjective_word(int codomain_size, std::vector<int> values)
        : m_(codomain_size), values_(std::move(values)) {
        if (m_ < 1) throw invalid_input("surjective_word: codomain must be non-empty");
        if (values_.empty()) throw invalid_input("surjective_word: domain must be non-empty");
        std::vector<char> hit(static_cast<std::size_t>(m_) + 1, 0);
        for (int v : values_) {
            if (v < 1 || v > m_)
                throw invalid_input("surjective_word: value outside [1, m]");
            hit[static_cast<std::size_t>(v)] = 1;
        }
        for (int v = 1; v <= m_; ++v)
            if (!hit[static_cast<std::size_t>(v)])
                throw invalid_input("surjective_word: not surjective onto [1, m]");
    }

    int domain_size() const { return static_cast<int>(values_.size()); }
    int codomain_size() const { return m_; }

    /** Image of the 1-based domain element i. */
    int at(int i) const {
        if (i < 1 || i > domain_size())
            throw invalid_input("surjective_word: index out of range");
        return values_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& values() const { return values_; }

    bool operator==(const surjective_word& other) const = default;

private:
    int m_;
    std::vector<int> values_;
};

namespace detail {

// Rank of value v inside the value SET of one member (duplicates collapse).
// Bitmask fast path for m <= 64; values and demands are raw, unvalidated.
inline bool member_rank_matches(const std::vector<int>& values, int m,
                                const std::vector<int>& member, int t_element,
                                int demand) {
    const int v = values[static_cast<std::size_t>(t_element - 1)];
    if (m <= 64) {
        std::uint64_t mask = 0;
        for (int e : member)
            mask |= std::uint64_t{1} << (values[static_cast<std::size_t>(e - 1)] - 1);
        const std::uint64_t below = (v == 1) ? 0 : mask & ((std::uint64_t{1} << (v - 1)) - 1);
        return std::popcount(below) + 1 == demand;
    }
    std::vector<char> present(static_cast<std::size_t>(m) + 1, 0);
    for (int e : member) present[static_cast<std::size_t>(values[static_cast<std::size_t>(e - 1)])] = 1;
    int rank = 0;
    for (int x = 1; x <= v; ++x) rank += present[static_cast<std::size_t>(x)];
    return rank == demand;
}

// Demand vector of the unique configuration a raw value vector satisfies.
inline std::vector<int> demands_of_values(const std::vector<int>& values,
                                          const set_family& fam,
                                          const std::vector<int>& t) {
    std::vector<int> demands;
    demands.reserve(static_cast<std::size_t>(fam.member_count()));
    std::vector<int> image;
    for (int i = 1; i <= fam.member_count(); ++i) {
        const auto& member = fam.member(i);
        image.clear();
        for (int e : member) image.push_back(values[static_cast<std::size_t>(e - 1)]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const int v = values[static_cast<std::size_t>(t[static_cast<std::size_t>(i - 1)] - 1)];
        const auto pos = std::lower_bound(image.begin(), image.end(), v);
        demands.push_back(static_cast<int>(pos - image.begin()) + 1);
    }
    return demands;
}

// Satisfaction on raw value vectors, shared by the public predicate and the
// enumeration loops.
inline bool satisfies_values(const std::vector<int>& values, int m,
                             const set_family& fam, const std::vector<int>& t,
                             const std::vector<int>& demands) {
    for (int i = 1; i <= fam.member_count(); ++i) {
        if (!member_rank_matches(values, m, fam.member(i),
                                 t[static_cast<std::size_t>(i - 1)],
                                 demands[static_cast<std::size_t>(i - 1)]))
            return false;
    }
    return true;
}

} // namespace detail

/**
 * Satisfaction of a configuration by a surjective word: for every member F,
 * the word value at t(F) is the demand-th smallest element of the value set
 * of F (duplicates collapsed).  False in particular when the demand exceeds
 * the number of distinct values on F.
 */
inline bool satisfies(const surjective_word& w, const set_family& fam,
                      const transversal& t, const configuration& f) {
    if (w.domain_size() != fam.ground_size())
        throw invalid_input("satisfies: word domain differs from ground size");
    validate_transversal(fam, t);
    validate_configuration(fam, f);
    return detail::satisfies_values(w.values(), w.codomain_size(), fam,
                                    t.assignment(), f.demands());
}

/**
 * The unique configuration a word satisfies: demand for member F = rank of
 * the word value at t(F) within the value set of F.
 */
inline configuration configuration_of(const surjective_word& w, const set_family& fam,
                                      const transversal& t) {
    if (w.domain_size() != fam.ground_size())
        throw invalid_input("configuration_of: word domain differs from ground size");
    validate_transversal(fam, t);
    return configuration(detail::demands_of_values(w.values(), fam, t.assignment()));
}

/** Product of member sizes = total number of configurations of fam. */
inline bigint total_configuration_count(const set_family& fam) {
    bigint out = 1;
    for (const auto& m : fam.members()) out *= static_cast<int>(m.size());
    return out;
}

/**
 * Streams every configuration of (fam, t) exactly once, in lexicographic
 * order of the demand vector, as a raw demand vector passed to fn.  The
 * transversal is validated but otherwise only fixes the interpretation of
 * the demands.
 */
template <typename Fn>
void for_each_configuration(const set_family& fam, const transversal& t, Fn&& fn) {
    validate_transversal(fam, t);
    detail::require_no_empty_member(fam, "for_each_configuration");
    const int k = fam.member_count();
    std::vector<int> demands(static_cast<std::size_t>(k), 1);
    for (;;) {
        fn(static_cast<const std::vector<int>&>(demands));
        int i = k - 1;
        while (i >= 0 && demands[static_cast<std::size_t>(i)] ==
                             static_cast<int>(fam.member(i + 1).size())) {
            demands[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++demands[static_cast<std::size_t>(i)];
    }
}

/**
 * Materialized configuration list (lexicographic).  Guarded: refuses when
 * the total count exceeds max_results.
 */
inline std::vector<configuration> enumerate_configurations(const set_family& fam,
                                                           const transversal& t,
                                                           std::int64_t max_results = 1000000) {
    if (total_configuration_count(fam) > max_results)
        throw oracle_limit_error("enumerate_configurations: configuration count exceeds bound");
    std::vector<configuration> out;
    for_each_configuration(fam, t, [&](const std::vector<int>& demands) {
        out.emplace_back(demands);
    });
    return out;
}

/**
 * Streams the value vector of every surjective word [n] -> [m] in
 * lexicographic order.  Prunes branches that cannot reach surjectivity
 * (missing values exceed remaining positions).
 */
template <typename Fn>
void for_each_surjective_word(int n, int m, Fn&& fn) {
    if (n < 1 || m < 1) throw invalid_input("for_each_surjective_word: sizes must be positive");
    if (m > n) return;
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    std::vector<int> uses(static_cast<std::size_t>(m) + 1, 0);
    int missing = m;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            fn(static_cast<const std::vector<int>&>(values));
            return;
        }
        for (int v = 1; v <= m; ++v) {
            const int next_missing = missing - (uses[static_cast<std::size_t>(v)] == 0 ? 1 : 0);
            if (next_missing > n - pos) continue;
            values[static_cast<std::size_t>(pos - 1)] = v;
            ++uses[static_cast<std::size_t>(v)];
            const int saved = missing;
            missing = next_missing;
            self(self, pos + 1);
            missing = saved;
            --uses[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 1);
}

/**
 * Exact A_{n,m}(f): the number of surjective words [n] -> [m] satisfying f,
 * by exhaustive enumeration.  Oracle-bounded on the ground size.
 */
inline bigint count_satisfying(const set_family& fam, const transversal& t,
                               const configuration& f, int m, int max_ground = 10) {
    validate_transversal(fam, t);
    validate_configuration(fam, f);
    const int n = fam.ground_size();
    if (m < 1) throw invalid_input("count_satisfying: m must be positive");
    if (m > n) throw invalid_input("count_satisfying: m exceeds the ground size");
    if (n > max_ground)
        throw oracle_limit_error("count_satisfying: ground size exceeds brute-force bound");
    bigint count = 0;
    for_each_surjective_word(n, m, [&](const std::vector<int>& values) {
        if (detail::satisfies_values(values, m, fam, t.assignment(), f.demands()))
            ++count;
    });
    return count;
}

} // namespace halltab
