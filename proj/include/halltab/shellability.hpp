#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "halltab/errors.hpp"
#include "halltab/family.hpp"

namespace halltab {

/**
 * An ordering of the members of a family: position k holds the 1-based
 * member index placed k-th.  The defining property — the k-th prefix union
 * has cardinality exactly k for every k — involves a family and is checked
 * by verify_shelling_order; the type itself guarantees a permutation.
 */
class shelling_order {
public:
    explicit shelling_order(std::vector<int> order) : order_(std::move(order)) {
        std::vector<int> seen(order_);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] != static_cast<int>(i) + 1)
                throw invalid_input("shelling_order: not a permutation of 1..k");
    }

    int size() const { return static_cast<int>(order_.size()); }

    /** Member index at 1-based position k. */
    int at(int position) const {
        if (position < 1 || position > size())
            throw invalid_input("shelling_order: position out of range");
        return order_[static_cast<std::size_t>(position - 1)];
    }

    const std::vector<int>& order() const { return order_; }

    bool operator==(const shelling_order& other) const = default;

private:
    std::vector<int> order_;
};

/**
 * Checks the prefix-union law: for every k, the union of the first k
 * members under ord has exactly k elements.  Rejects orders whose length
 * differs from the member count (not a permutation of the member indices).
 */
inline bool verify_shelling_order(const set_family& fam, const shelling_order& ord) {
    if (ord.size() != fam.member_count())
        throw invalid_input("verify_shelling_order: order length differs from member count");
    std::vector<char> in_union(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    int union_size = 0;
    for (int k = 1; k <= ord.size(); ++k) {
        for (int e : fam.member(ord.at(k))) {
            if (!in_union[static_cast<std::size_t>(e)]) {
                in_union[static_cast<std::size_t>(e)] = 1;
                ++union_size;
            }
        }
        if (union_size != k) return false;
    }
    return true;
}

/** Elements of [n] contained in exactly one member (duplicate members are
 *  distinct, so an element in two copies of the same set does not count). */
inline std::vector<int> unique_element_set(const set_family& fam) {
    std::vector<int> coverage(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    for (const auto& m : fam.members())
        for (int e : m) ++coverage[static_cast<std::size_t>(e)];
    std::vector<int> out;
    for (int e = 1; e <= fam.ground_size(); ++e)
        if (coverage[static_cast<std::size_t>(e)] == 1) out.push_back(e);
    return out;
}

namespace detail {

// Backward peel with backtracking.  A member may sit last in a valid order
// iff exactly one of its elements is covered by no other remaining member;
// peeling it preserves |union| == |remaining|.  Candidates are tried in
// ascending member index order, so the first complete order found is the
// greedy one and the result is deterministic.
inline bool peel_order(const set_family& fam, std::vector<char>& remaining,
                       std::vector<int>& coverage, int position,
                       std::vector<int>& out) {
    if (position == 0) return true;
    for (int i = 1; i <= fam.member_count(); ++i) {
        if (!remaining[static_cast<std::size_t>(i)]) continue;
        int unique_here = 0;
        for (int e : fam.member(i))
            if (coverage[static_cast<std::size_t>(e)] == 1) ++unique_here;
        if (unique_here != 1) continue;
        remaining[static_cast<std::size_t>(i)] = 0;
        for (int e : fam.member(i)) --coverage[static_cast<std::size_t>(e)];
        if (peel_order(fam, remaining, coverage, position - 1, out)) {
            out[static_cast<std::size_t>(position - 1)] = i;
            return true;
        }
        for (int e : fam.member(i)) ++coverage[static_cast<std::size_t>(e)];
        remaining[static_cast<std::size_t>(i)] = 1;
    }
    return false;
}

} // namespace detail

/**
 * Finds an ordering whose k-th prefix union has cardinality k, if one
 * exists.  Greedy peel from the last position with a full backtracking
 * fallback (greedy alone is not assumed complete); any order produced is
 * re-verified before being returned.
 */
inline std::optional<shelling_order> find_shelling_order(const set_family& fam) {
    detail::require_no_empty_member(fam, "find_shelling_order");
    const int m = fam.member_count();
    if (m == 0) return shelling_order(std::vector<int>{});
    std::vector<int> coverage(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    int union_size = 0;
    for (const auto& mem : fam.members())
        for (int e : mem)
            if (coverage[static_cast<std::size_t>(e)]++ == 0) ++union_size;
    if (union_size != m) return std::nullopt; // necessary: |union of all| == member count
    std::vector<char> remaining(static_cast<std::size_t>(m) + 1, 1);
    std::vector<int> out(static_cast<std::size_t>(m), 0);
    if (!detail::peel_order(fam, remaining, coverage, m, out)) return std::nullopt;
    shelling_order ord(std::move(out));
    if (!verify_shelling_order(fam, ord))
        throw error("find_shelling_order: internal check failed"); // unreachable
    return ord;
}

/** True iff the family has exactly one transversal (search stops after
 *  finding two, so no oracle bound is needed). */
inline bool has_unique_transversal(const set_family& fam) {
    return count_transversals_up_to(fam, 2) == 1;
}

/**
 * Shellability predicate.  Decided through find_shelling_order; agreement
 * with the unique-transversal characterization (has_unique_transversal) is
 * a tested invariant rather than an assumption here.
 */
inline bool is_shellable(const set_family& fam) {
    return find_shelling_order(fam).has_value();
}

} // namespace halltab
