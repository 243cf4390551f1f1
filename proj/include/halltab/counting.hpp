#pragma once

#include <map>
#include <vector>

#include "halltab/config.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/numeric.hpp"
#include "halltab/shellability.hpp"
#include "halltab/solve.hpp"

namespace halltab {

/**
 * Stirling number of the second kind S(n, m): partitions of an n-set into m
 * non-empty blocks, by the recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1).
 * S(0,0) = 1, S(n,0) = 0 for n > 0, and S(n,m) = 0 for m > n by convention.
 */
inline bigint stirling2(int n, int m) {
    if (n < 0 || m < 0) throw invalid_input("stirling2: arguments must be non-negative");
    if (m > n) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    // row[j] = S(i, j) while sweeping i upward
    std::vector<bigint> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1; // S(0, 0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, m); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0; // S(i, 0) for i >= 1
    }
    return row[static_cast<std::size_t>(m)];
}

/**
 * S(n, m) by the explicit alternating sum (1/m!) sum_i (-1)^i C(m,i)(m-i)^n —
 * the independent cross-check route for the recurrence.
 */
inline bigint stirling2_explicit(int n, int m) {
    if (n < 0 || m < 0) throw invalid_input("stirling2_explicit: arguments must be non-negative");
    if (m > n) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    bigint sum = 0;
    for (int i = 0; i <= m; ++i) {
        bigint term = binomial(m, i) * boost::multiprecision::pow(bigint(m - i), static_cast<unsigned>(n));
        sum += (i % 2 == 0) ? term : -term;
    }
    const bigint fact = factorial(m);
    if (sum % fact != 0)
        throw error("stirling2_explicit: alternating sum not divisible by m!");
    return sum / fact;
}

/** Number of surjective maps [n] -> [m]: m! S(n, m). */
inline bigint surjection_count(int n, int m) {
    if (n < 1 || m < 1) throw invalid_input("surjection_count: sizes must be positive");
    if (m > n) return 0;
    return factorial(m) * stirling2(n, m);
}

namespace detail {

// Product of member sizes, checked positive (no empty members).
inline bigint member_size_product(const set_family& fam, const char* op) {
    require_no_empty_member(fam, op);
    bigint out = 1;
    for (const auto& m : fam.members()) out *= static_cast<int>(m.size());
    return out;
}

} // namespace detail

/**
 * The theorem's average of A_{n,m}(f) over achievable configurations:
 * m! S(n,m) / prod |F|.  Enforces the theorem's hypotheses — |members| = n,
 * family shellable, m within m_range — and names the violated one.
 */
inline exact_rational average_formula(const set_family& fam, int m) {
    const int n = fam.ground_size();
    if (fam.member_count() != n)
        throw hypothesis_error("average_formula: member count must equal the ground size");
    const auto product = detail::member_size_product(fam, "average_formula");
    if (!is_shellable(fam))
        throw hypothesis_error("average_formula: family is not shellable");
    const auto [lo, hi] = m_range(fam);
    if (m < lo || m > hi)
        throw hypothesis_error("average_formula: m outside the theorem range [min(n, n-|S|+1), n]");
    return exact_rational(factorial(m) * stirling2(n, m)) / exact_rational(product);
}

/**
 * Brute-force average of A_{n,m}(f) over the achievable configurations
 * X = {f : A_{n,m}(f) >= 1}: one histogram pass over all surjective words
 * (each word counts under exactly its own configuration), 0 when X is
 * empty.  Works for any family with a valid transversal; oracle-bounded.
 */
inline exact_rational average_bruteforce(const set_family& fam, const transversal& t,
                                         int m, int max_ground = 8) {
    validate_transversal(fam, t);
    detail::require_no_empty_member(fam, "average_bruteforce");
    const int n = fam.ground_size();
    if (m < 1) throw invalid_input("average_bruteforce: m must be positive");
    if (n > max_ground)
        throw oracle_limit_error("average_bruteforce: ground size exceeds brute-force bound");
    std::map<std::vector<int>, bigint> histogram;
    for_each_surjective_word(n, m, [&](const std::vector<int>& values) {
        ++histogram[detail::demands_of_values(values, fam, t.assignment())];
    });
    if (histogram.empty()) return 0;
    bigint total = 0;
    for (const auto& [demands, count] : histogram) total += count;
    return exact_rational(total) / exact_rational(static_cast<int>(histogram.size()));
}

/**
 * The displayed closed forms of the average for n - m in {0, 1, 2}:
 *   n = m     : m! / prod|F|
 *   n = m + 1 : C(m+1, 2) m! / prod|F|
 *   n = m + 2 : (1/2) C(m+1, 2) (C(m+1, 2) + (2m+1)/3) m! / prod|F|
 * Same hypotheses as average_formula, and must agree with it exactly.
 */
inline exact_rational average_closed_form(const set_family& fam, int m) {
    const int n = fam.ground_size();
    if (fam.member_count() != n)
        throw hypothesis_error("average_closed_form: member count must equal the ground size");
    const auto product = detail::member_size_product(fam, "average_closed_form");
    if (!is_shellable(fam))
        throw hypothesis_error("average_closed_form: family is not shellable");
    const auto [lo, hi] = m_range(fam);
    if (m < lo || m > hi)
        throw hypothesis_error("average_closed_form: m outside the theorem range [min(n, n-|S|+1), n]");
    const int diff = n - m;
    if (diff < 0 || diff > 2)
        throw hypothesis_error("average_closed_form: only n - m in {0, 1, 2} is supported");
    const exact_rational base = exact_rational(factorial(m)) / exact_rational(product);
    if (diff == 0) return base;
    const exact_rational pairs(binomial(m + 1, 2));
    if (diff == 1) return pairs * base;
    return pairs * (pairs + exact_rational(2 * m + 1, 3)) / 2 * base;
}

} // namespace halltab
