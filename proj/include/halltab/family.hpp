#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "halltab/errors.hpp"

namespace halltab {

/**
 * An indexed family of subsets of the ground set [n] = {1,...,n}.
 *
 * Members are identified by 1-based position, so duplicate subsets stay
 * distinct (multiset semantics).  Each member is stored sorted with
 * duplicates removed.  Empty members are legal at the type level; the
 * Hall-related operations reject them with empty_member_error.
 */
class set_family {
public:
    set_family(int ground_size, std::vector<std::vector<int>> members)
        : n_(ground_size), members_(std::move(members)) {
        if (n_ < 1) throw invalid_input("set_family: ground size must be positive");
        for (auto& m : members_) {
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            if (!m.empty() && (m.front() < 1 || m.back() > n_))
                throw invalid_input("set_family: member element outside [1, n]");
        }
    }

    int ground_size() const { return n_; }
    int member_count() const { return static_cast<int>(members_.size()); }

    /** Member by 1-based index, as a sorted duplicate-free vector. */
    const std::vector<int>& member(int index) const {
        if (index < 1 || index > member_count())
            throw invalid_input("set_family: member index out of range");
        return members_[static_cast<std::size_t>(index - 1)];
    }

    const std::vector<std::vector<int>>& members() const { return members_; }

    bool has_empty_member() const {
        return std::any_of(members_.begin(), members_.end(),
                           [](const auto& m) { return m.empty(); });
    }

    bool operator==(const set_family& other) const = default;

private:
    int n_;
    std::vector<std::vector<int>> members_;
};

/**
 * A system of distinct representatives: an injective assignment of one
 * element to each member index.  Membership (assignment(i) in member i)
 * depends on a family and is checked by is_valid_transversal.
 */
class transversal {
public:
    explicit transversal(std::vector<int> assignment)
        : assignment_(std::move(assignment)) {
        std::vector<int> seen(assignment_);
        std::sort(seen.begin(), seen.end());
        if (!seen.empty() && seen.front() < 1)
            throw invalid_input("transversal: elements must be positive");
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw invalid_input("transversal: assignment must be injective");
    }

    int size() const { return static_cast<int>(assignment_.size()); }

    /** Element assigned to the member with the given 1-based index. */
    int at(int member_index) const {
        if (member_index < 1 || member_index > size())
            throw invalid_input("transversal: member index out of range");
        return assignment_[static_cast<std::size_t>(member_index - 1)];
    }

    const std::vector<int>& assignment() const { return assignment_; }

    bool operator==(const transversal& other) const = default;

private:
    std::vector<int> assignment_;
};

/** True iff t assigns to every member of fam one of its own elements,
 *  injectively, covering all members. */
inline bool is_valid_transversal(const set_family& fam, const transversal& t) {
    if (t.size() != fam.member_count()) return false;
    for (int i = 1; i <= fam.member_count(); ++i) {
        const auto& m = fam.member(i);
        if (!std::binary_search(m.begin(), m.end(), t.at(i))) return false;
    }
    return true; // injectivity is a transversal type invariant
}

/** Throws invalid_input unless t is a valid transversal of fam. */
inline void validate_transversal(const set_family& fam, const transversal& t) {
    if (!is_valid_transversal(fam, t))
        throw invalid_input("transversal is not valid for this family");
}

namespace detail {

inline void require_no_empty_member(const set_family& fam, const char* op) {
    if (fam.has_empty_member())
        throw empty_member_error(std::string(op) + ": family contains an empty member");
}

// Kuhn's augmenting-path step.  Members are tried in ascending index order
// by the caller and elements in ascending numeric order here, which makes
// the resulting matching deterministic.
inline bool try_augment(const set_family& fam, int member_index,
                        std::vector<int>& matched_member,
                        std::vector<char>& visited) {
    for (int e : fam.member(member_index)) {
        if (visited[static_cast<std::size_t>(e)]) continue;
        visited[static_cast<std::size_t>(e)] = 1;
        int& owner = matched_member[static_cast<std::size_t>(e)];
        if (owner == 0 || try_augment(fam, owner, matched_member, visited)) {
            owner = member_index;
            return true;
        }
    }
    return false;
}

// Maximum bipartite matching member->element; matched_member[e] is the
// member holding element e, or 0.  Returns the matching size.
inline int maximum_matching(const set_family& fam, std::vector<int>& matched_member) {
    matched_member.assign(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    int size = 0;
    for (int i = 1; i <= fam.member_count(); ++i) {
        std::vector<char> visited(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
        if (try_augment(fam, i, matched_member, visited)) ++size;
    }
    return size;
}

} // namespace detail

/**
 * Hall's marriage condition: every subfamily has a union at least as large
 * as itself.  Decided via maximum matching (the condition holds iff a
 * matching saturates all members); matching and subset routes must agree,
 * see marriage_condition_by_subsets.
 *
 * Empty members are allowed here: a subfamily containing one violates the
 * condition, and indeed an empty member can never be matched.
 */
inline bool satisfies_marriage_condition(const set_family& fam) {
    std::vector<int> matched_member;
    return detail::maximum_matching(fam, matched_member) == fam.member_count();
}

/**
 * Reference route for the marriage condition: enumerate all 2^m subfamilies
 * and compare |F'| with |union F'| directly.  Oracle-bounded.
 */
inline bool marriage_condition_by_subsets(const set_family& fam, int max_members = 20) {
    const int m = fam.member_count();
    if (m > max_members)
        throw oracle_limit_error("marriage_condition_by_subsets: member count exceeds bound");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<char> in_union(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
        int picked = 0, union_size = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            ++picked;
            for (int e : fam.member(i + 1)) {
                if (!in_union[static_cast<std::size_t>(e)]) {
                    in_union[static_cast<std::size_t>(e)] = 1;
                    ++union_size;
                }
            }
        }
        if (picked > union_size) return false;
    }
    return true;
}

/**
 * Finds a transversal iff the marriage condition holds.  Deterministic:
 * augmenting paths scan elements ascending and members in ascending index
 * order.  Rejects families with empty members (a precondition violation,
 * distinct from "no transversal exists").
 */
inline std::optional<transversal> find_transversal(const set_family& fam) {
    detail::require_no_empty_member(fam, "find_transversal");
    std::vector<int> matched_member;
    if (detail::maximum_matching(fam, matched_member) != fam.member_count())
        return std::nullopt;
    std::vector<int> assignment(static_cast<std::size_t>(fam.member_count()), 0);
    for (int e = 1; e <= fam.ground_size(); ++e)
        if (int i = matched_member[static_cast<std::size_t>(e)]; i != 0)
            assignment[static_cast<std::size_t>(i - 1)] = e;
    return transversal(std::move(assignment));
}

/**
 * Exhaustive, duplicate-free list of all transversals, ordered
 * lexicographically by assignment vector.  Brute-force oracle; refuses
 * families with more than max_members members.
 */
inline std::vector<transversal> all_transversals(const set_family& fam, int max_members = 10) {
    detail::require_no_empty_member(fam, "all_transversals");
    if (fam.member_count() > max_members)
        throw oracle_limit_error("all_transversals: member count exceeds bound");
    std::vector<transversal> out;
    std::vector<int> acc(static_cast<std::size_t>(fam.member_count()), 0);
    std::vector<char> used(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > fam.member_count()) {
            out.emplace_back(acc);
            return;
        }
        for (int e : fam.member(i)) {
            if (used[static_cast<std::size_t>(e)]) continue;
            used[static_cast<std::size_t>(e)] = 1;
            acc[static_cast<std::size_t>(i - 1)] = e;
            self(self, i + 1);
            used[static_cast<std::size_t>(e)] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

/**
 * Number of transversals, counting only up to the cutoff (use cutoff 2 to
 * decide "exactly one" without enumerating everything).  No member bound:
 * the search tree is pruned as soon as the cutoff is reached.
 */
inline int count_transversals_up_to(const set_family& fam, int cutoff) {
    detail::require_no_empty_member(fam, "count_transversals_up_to");
    int found = 0;
    std::vector<char> used(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (found >= cutoff) return;
        if (i > fam.member_count()) {
            ++found;
            return;
        }
        for (int e : fam.member(i)) {
            if (used[static_cast<std::size_t>(e)]) continue;
            used[static_cast<std::size_t>(e)] = 1;
            self(self, i + 1);
            used[static_cast<std::size_t>(e)] = 0;
            if (found >= cutoff) return;
        }
    };
    rec(rec, 1);
    return found;
}

} // namespace halltab
