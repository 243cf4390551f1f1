#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "halltab/config.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/shellability.hpp"

namespace halltab {

/**
 * The codomain range of the main equivalence: (min(n, n-|S|+1), n) where S
 * is the set of elements lying in exactly one member.  Requires the
 * theorem's standing hypothesis |members| = n.
 */
inline std::pair<int, int> m_range(const set_family& fam) {
    const int n = fam.ground_size();
    if (fam.member_count() != n)
        throw hypothesis_error("m_range: member count must equal the ground size");
    const int s = static_cast<int>(unique_element_set(fam).size());
    return {std::min(n, n - s + 1), n};
}

/**
 * Extracts a shelling order from a witness word per the constructive half
 * of the main theorem: sort members ascending by the word value at their
 * representative (ties by member index).  The witness must satisfy the
 * all-maximal configuration f1 (demand = member size for every member);
 * the returned order is re-verified.
 */
inline shelling_order shelling_order_from_witness(const set_family& fam,
                                                  const transversal& t,
                                                  const surjective_word& w) {
    if (fam.member_count() != fam.ground_size())
        throw hypothesis_error("shelling_order_from_witness: member count must equal the ground size");
    validate_transversal(fam, t);
    std::vector<int> maximal_demands;
    maximal_demands.reserve(static_cast<std::size_t>(fam.member_count()));
    for (const auto& m : fam.members())
        maximal_demands.push_back(static_cast<int>(m.size()));
    if (!satisfies(w, fam, t, configuration(maximal_demands)))
        throw hypothesis_error("shelling_order_from_witness: word does not satisfy the maximal configuration");

    std::vector<int> order(static_cast<std::size_t>(fam.member_count()));
    for (int i = 1; i <= fam.member_count(); ++i)
        order[static_cast<std::size_t>(i - 1)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int wa = w.at(t.at(a));
        const int wb = w.at(t.at(b));
        return wa != wb ? wa < wb : a < b;
    });
    shelling_order ord(std::move(order));
    if (!verify_shelling_order(fam, ord))
        throw error("shelling_order_from_witness: constructed order failed verification");
    return ord;
}

namespace detail {

// Constructive solver for shellable families with |members| = n, following
// the proof of the main theorem.  members are sorted element vectors,
// t[i]/demands[i] are 0-based-position data for member i+1; t is a
// bijection onto [n].  Returns the value vector of a satisfying word
// [n] -> [m].  Requires max(1, n-|S|+1) <= m <= n.
inline std::vector<int> solve_shellable(const std::vector<std::vector<int>>& members,
                                        const std::vector<int>& t,
                                        const std::vector<int>& demands, int m) {
    const int n = static_cast<int>(members.size());
    if (n == 1) return {1};
    if (m == 1) return std::vector<int>(static_cast<std::size_t>(n), 1); // all members are singletons here

    // S = elements in exactly one member; T = the largest n-m+1 of them.
    std::vector<int> coverage(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& mem : members)
        for (int e : mem) ++coverage[static_cast<std::size_t>(e)];
    std::vector<int> s_elements;
    for (int e = 1; e <= n; ++e)
        if (coverage[static_cast<std::size_t>(e)] == 1) s_elements.push_back(e);
    const int extra = n - m + 1;
    if (static_cast<int>(s_elements.size()) < extra)
        throw error("solve: fewer unique elements than the recursion requires"); // unreachable in contract
    std::vector<char> in_t(static_cast<std::size_t>(n) + 1, 0);
    for (int idx = static_cast<int>(s_elements.size()) - extra;
         idx < static_cast<int>(s_elements.size()); ++idx)
        in_t[static_cast<std::size_t>(s_elements[static_cast<std::size_t>(idx)])] = 1;

    // Relabel elements: [n] minus T ascending -> 1..m-1, T ascending -> m..n.
    std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
    int next_low = 0, next_high = m - 1;
    for (int e = 1; e <= n; ++e)
        relabel[static_cast<std::size_t>(e)] = in_t[static_cast<std::size_t>(e)] ? ++next_high : ++next_low;

    // Owner of relabeled element v in m..n = the unique member containing
    // it; its representative is that element (t is a bijection and v lies
    // in exactly one member).
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        const int rt = relabel[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        if (rt >= m) owner[static_cast<std::size_t>(rt)] = i;
    }

    // F0 = members whose representative relabels below m, in index order.
    std::vector<std::vector<int>> sub_members;
    std::vector<int> sub_t, sub_demands;
    for (int i = 0; i < n; ++i) {
        const int rt = relabel[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        if (rt >= m) continue;
        std::vector<int> g;
        g.reserve(members[static_cast<std::size_t>(i)].size());
        for (int e : members[static_cast<std::size_t>(i)])
            g.push_back(relabel[static_cast<std::size_t>(e)]);
        std::sort(g.begin(), g.end());
        sub_members.push_back(std::move(g));
        sub_t.push_back(rt);
        sub_demands.push_back(demands[static_cast<std::size_t>(i)]);
    }
    // F0 lives inside [m-1]: every element of T lies only in its owner.
    const std::vector<int> sigma = solve_shellable(sub_members, sub_t, sub_demands, m - 1);

    // sigma is a permutation of [m-1]; extend over T via kappa.
    // image_below[v] = sorted sigma-image of (owner's member minus v).
    std::vector<std::vector<int>> image_below(static_cast<std::size_t>(n) + 1);
    bool any_maximal = false;
    for (int v = m; v <= n; ++v) {
        const int i = owner[static_cast<std::size_t>(v)];
        std::vector<int> img;
        for (int e : members[static_cast<std::size_t>(i)]) {
            const int re = relabel[static_cast<std::size_t>(e)];
            if (re != v) img.push_back(sigma[static_cast<std::size_t>(re - 1)]);
        }
        std::sort(img.begin(), img.end());
        if (demands[static_cast<std::size_t>(i)] ==
            static_cast<int>(members[static_cast<std::size_t>(i)].size()))
            any_maximal = true;
        image_below[static_cast<std::size_t>(v)] = std::move(img);
    }

    std::vector<int> word_hat(static_cast<std::size_t>(n) + 1, 0);
    if (any_maximal) {
        // kappa' : keep [m-1] fixed; members demanding their maximum get m,
        // the rest get the demanded element of their (unchanged) image.
        for (int e = 1; e <= m - 1; ++e)
            word_hat[static_cast<std::size_t>(e)] = sigma[static_cast<std::size_t>(e - 1)];
        for (int v = m; v <= n; ++v) {
            const int i = owner[static_cast<std::size_t>(v)];
            const int d = demands[static_cast<std::size_t>(i)];
            const auto& img = image_below[static_cast<std::size_t>(v)];
            word_hat[static_cast<std::size_t>(v)] =
                d == static_cast<int>(members[static_cast<std::size_t>(i)].size())
                    ? m
                    : img[static_cast<std::size_t>(d - 1)];
        }
    } else {
        // kappa'' : open a gap at the smallest value that makes the word
        // value at element n the d_n-th smallest on its member.
        const int i_n = owner[static_cast<std::size_t>(n)];
        const int d_n = demands[static_cast<std::size_t>(i_n)];
        const auto& img_n = image_below[static_cast<std::size_t>(n)];
        const int gap = d_n == 1 ? 1 : img_n[static_cast<std::size_t>(d_n - 2)] + 1;
        auto kappa = [gap](int x) { return x < gap ? x : x + 1; };
        for (int e = 1; e <= m - 1; ++e)
            word_hat[static_cast<std::size_t>(e)] = kappa(sigma[static_cast<std::size_t>(e - 1)]);
        for (int v = m; v < n; ++v) {
            const int i = owner[static_cast<std::size_t>(v)];
            const int d = demands[static_cast<std::size_t>(i)];
            word_hat[static_cast<std::size_t>(v)] =
                kappa(image_below[static_cast<std::size_t>(v)][static_cast<std::size_t>(d - 1)]);
        }
        word_hat[static_cast<std::size_t>(n)] = gap;
    }

    // Undo the relabeling.
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int e = 1; e <= n; ++e)
        out[static_cast<std::size_t>(e - 1)] = word_hat[static_cast<std::size_t>(relabel[static_cast<std::size_t>(e)])];
    return out;
}

// Lexicographically first satisfying surjective word, or nothing.
inline std::optional<std::vector<int>> search_satisfying_word(const set_family& fam,
                                                              const std::vector<int>& t,
                                                              const std::vector<int>& demands,
                                                              int m) {
    std::optional<std::vector<int>> found;
    for_each_surjective_word(fam.ground_size(), m, [&](const std::vector<int>& values) {
        if (!found && satisfies_values(values, m, fam, t, demands)) found = values;
    });
    return found;
}

} // namespace detail

/**
 * Produces a surjective word [n] -> [m] satisfying f, when one exists.
 *
 * For shellable families this follows the main theorem's constructive
 * proof (split off the members owning the largest unique elements, recurse,
 * extend by an order-preserving value map) and always succeeds; the result
 * is asserted to satisfy f.  For non-shellable families it falls back to a
 * bounded exhaustive search (ascending value order) and may return nothing.
 *
 * Requires |members| = n and m inside m_range(fam).
 */
inline std::optional<surjective_word> solve(const set_family& fam, const transversal& t,
                                            const configuration& f, int m,
                                            int max_ground_for_search = 10) {
    const int n = fam.ground_size();
    if (fam.member_count() != n)
        throw hypothesis_error("solve: member count must equal the ground size");
    detail::require_no_empty_member(fam, "solve");
    validate_transversal(fam, t);
    validate_configuration(fam, f);
    const auto [lo, hi] = m_range(fam);
    if (m < lo || m > hi)
        throw hypothesis_error("solve: m outside the theorem range [min(n, n-|S|+1), n]");

    if (is_shellable(fam)) {
        auto values = detail::solve_shellable(fam.members(), t.assignment(), f.demands(), m);
        surjective_word w(m, std::move(values));
        if (!satisfies(w, fam, t, f))
            throw error("solve: constructed word failed verification");
        return w;
    }
    if (n > max_ground_for_search)
        throw oracle_limit_error("solve: fallback search exceeds the brute-force bound");
    auto values = detail::search_satisfying_word(fam, t.assignment(), f.demands(), m);
    if (!values) return std::nullopt;
    return surjective_word(m, std::move(*values));
}

} // namespace halltab
