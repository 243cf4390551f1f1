#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "halltab/config.hpp"
#include "halltab/counting.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/numeric.hpp"
#include "halltab/shapes.hpp"
#include "halltab/shellability.hpp"
#include "halltab/solve.hpp"

namespace halltab {

/**
 * Outcome of one property suite: the suite id, whether every checked
 * instance passed, how many instances were checked, and either a summary
 * or a description of the first failing instance.
 */
struct suite_result {
    std::string id;
    bool pass = true;
    long long cases = 0;
    std::string detail;
};

/** Seed used by randomized suites when the caller does not supply one. */
inline constexpr std::uint64_t default_verify_seed = 20240819;

namespace gen {

/**
 * Uniform integer in [lo, hi] drawn with plain modulo reduction.  The tiny
 * bias is irrelevant for test generation, and unlike
 * std::uniform_int_distribution the sampled sequence is identical across
 * standard-library implementations, which keeps seeded suites reproducible.
 */
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/** Random family over [n] with the given member count; members non-empty. */
inline set_family random_family(std::mt19937_64& rng, int n, int member_count) {
    std::vector<std::vector<int>> members;
    members.reserve(static_cast<std::size_t>(member_count));
    for (int i = 0; i < member_count; ++i) {
        std::vector<int> m;
        for (int e = 1; e <= n; ++e)
            if (rng() & 1u) m.push_back(e);
        if (m.empty()) m.push_back(uniform_int(rng, 1, n));
        members.push_back(std::move(m));
    }
    return set_family(n, std::move(members));
}

/**
 * Random shellable family with n members over [n].  Built from a random
 * element order e_1..e_n: the k-th generated member is {e_k} plus a random
 * subset of {e_1..e_{k-1}}, so the construction order is a shelling order
 * (the k-th prefix union is exactly {e_1..e_k}); member order is then
 * shuffled.  Every family produced this way is shellable by construction.
 */
inline set_family random_shellable_family(std::mt19937_64& rng, int n) {
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(elems[static_cast<std::size_t>(i)],
                  elems[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    std::vector<std::vector<int>> members;
    members.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<int> m{elems[static_cast<std::size_t>(k)]};
        for (int j = 0; j < k; ++j)
            if (rng() & 1u) m.push_back(elems[static_cast<std::size_t>(j)]);
        members.push_back(std::move(m));
    }
    for (int i = n - 1; i > 0; --i)
        std::swap(members[static_cast<std::size_t>(i)],
                  members[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    return set_family(n, std::move(members));
}

/**
 * Every multiset of non-empty subsets of [n] with member count between
 * min_members and max_members, as a set_family.  Multisets are produced as
 * non-decreasing sequences of subset bitmasks, so each family shape appears
 * exactly once.
 */
template <typename Fn>
inline void for_each_family_multiset(int n, int min_members, int max_members, Fn&& fn) {
    const int mask_count = (1 << n) - 1;
    std::vector<std::vector<int>> subset_of_mask(static_cast<std::size_t>(mask_count) + 1);
    for (int mask = 1; mask <= mask_count; ++mask)
        for (int e = 1; e <= n; ++e)
            if (mask & (1 << (e - 1))) subset_of_mask[static_cast<std::size_t>(mask)].push_back(e);

    std::vector<std::vector<int>> members;
    auto rec = [&](auto&& self, int first_mask) -> void {
        const int count = static_cast<int>(members.size());
        if (count >= min_members) fn(set_family(n, members));
        if (count == max_members) return;
        for (int mask = first_mask; mask <= mask_count; ++mask) {
            members.push_back(subset_of_mask[static_cast<std::size_t>(mask)]);
            self(self, mask);
            members.pop_back();
        }
    };
    rec(rec, 1);
}

/**
 * Every shellable family with n members over [n] (one per member multiset),
 * together with its unique transversal.
 */
template <typename Fn>
inline void for_each_shellable_family(int n, Fn&& fn) {
    for_each_family_multiset(n, n, n, [&](const set_family& fam) {
        if (!is_shellable(fam)) return;
        auto t = find_transversal(fam);
        if (!t) throw error("for_each_shellable_family: shellable family without transversal");
        fn(fam, *t);
    });
}

/** Every partition (weakly decreasing positive rows) with 1..max_cells cells. */
template <typename Fn>
inline void for_each_partition(int max_cells, Fn&& fn) {
    std::vector<int> rows;
    auto rec = [&](auto&& self, int remaining, int row_cap) -> void {
        if (!rows.empty()) fn(rows);
        for (int len = std::min(row_cap, remaining); len >= 1; --len) {
            rows.push_back(len);
            self(self, remaining - len, len);
            rows.pop_back();
        }
    };
    rec(rec, max_cells, max_cells);
}

/**
 * Every canonical skew shape with 1..max_cells cells.  Canonical means no
 * translate duplicates: every row is non-empty (mu_i < lambda_i) and the
 * last row starts in column 1 (its mu entry is 0).  Row lengths are capped
 * at max_cells, which bounds the enumeration; horizontally disconnected
 * shapes are included.
 */
template <typename Fn>
inline void for_each_skew_shape(int max_cells, Fn&& fn) {
    std::vector<int> lambda;
    std::vector<int> mu;
    auto rec = [&](auto&& self, int used, int lambda_cap, int mu_cap) -> void {
        if (!lambda.empty() && mu.back() == 0) fn(skew_shape(lambda, mu));
        if (used == max_cells) return;
        for (int lam = 1; lam <= lambda_cap; ++lam) {
            for (int m = std::min(mu_cap, lam - 1); m >= 0; --m) {
                if (used + lam - m > max_cells) continue;
                lambda.push_back(lam);
                mu.push_back(m);
                self(self, used + lam - m, lam, m);
                mu.pop_back();
                lambda.pop_back();
            }
        }
    };
    rec(rec, 0, max_cells, max_cells);
}

} // namespace gen

namespace detail {

/** Accumulates a suite verdict; keeps the first failure description. */
struct suite_recorder {
    suite_result r;

    explicit suite_recorder(std::string id) { r.id = std::move(id); }

    void check(bool ok, const std::string& failure) {
        ++r.cases;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = failure;
        }
    }

    suite_result done(const std::string& summary) {
        if (r.pass) r.detail = summary;
        return std::move(r);
    }
};

inline std::string describe_family(const set_family& fam) {
    std::string s = "n=" + std::to_string(fam.ground_size()) + " members=[";
    for (int i = 1; i <= fam.member_count(); ++i) {
        if (i > 1) s += ",";
        s += "{";
        const auto& m = fam.member(i);
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(m[j]);
        }
        s += "}";
    }
    return s + "]";
}

inline std::string describe_shape(const skew_shape& shape) {
    std::string s = "lambda=(";
    for (std::size_t i = 0; i < shape.lambda().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape.lambda()[i]);
    }
    s += ")";
    if (!shape.mu().empty()) {
        s += "/(";
        for (std::size_t i = 0; i < shape.mu().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape.mu()[i]);
        }
        s += ")";
    }
    return s;
}

/** All-ones configuration f0 for a family. */
inline configuration minimal_configuration(const set_family& fam) {
    return configuration(std::vector<int>(static_cast<std::size_t>(fam.member_count()), 1));
}

/** Maximal configuration f1 (demand = member size) for a family. */
inline configuration maximal_configuration(const set_family& fam) {
    std::vector<int> demands;
    demands.reserve(static_cast<std::size_t>(fam.member_count()));
    for (const auto& m : fam.members()) demands.push_back(static_cast<int>(m.size()));
    return configuration(std::move(demands));
}

/**
 * Histogram of configuration demand vectors over all surjective words
 * [n] -> [m], for a family with a transversal.  The count attached to a
 * demand vector is the number of words whose induced configuration is it.
 */
inline std::map<std::vector<int>, long long> configuration_histogram(const set_family& fam,
                                                                     const transversal& t,
                                                                     int m) {
    std::map<std::vector<int>, long long> hist;
    const auto& tv = t.assignment();
    for_each_surjective_word(fam.ground_size(), m, [&](const std::vector<int>& values) {
        ++hist[demands_of_values(values, fam, tv)];
    });
    return hist;
}

/** True when some ordering of the members is a shelling order (brute force). */
inline bool shelling_order_exists_bruteforce(const set_family& fam) {
    const int k = fam.member_count();
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    std::vector<char> covered(static_cast<std::size_t>(fam.ground_size()) + 1, 0);
    auto rec = [&](auto&& self, int placed, int union_size) -> bool {
        if (placed == k) return true;
        for (int i = 1; i <= k; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            std::vector<int> added;
            for (int e : fam.member(i))
                if (!covered[static_cast<std::size_t>(e)]) added.push_back(e);
            if (static_cast<int>(added.size()) != 1) continue;
            used[static_cast<std::size_t>(i)] = 1;
            covered[static_cast<std::size_t>(added[0])] = 1;
            if (self(self, placed + 1, union_size + 1)) return true;
            covered[static_cast<std::size_t>(added[0])] = 0;
            used[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace detail

/**
 * Hall equivalence: the marriage condition holds iff a transversal exists,
 * via three routes (matching predicate, transversal search, exhaustive
 * transversal enumeration), and any found transversal is valid.
 * bound = max ground size of the exhaustive sweep.
 */
inline suite_result verify_hall_equivalence(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("hall-equivalence");
    auto check_family = [&](const set_family& fam) {
        const bool marriage = satisfies_marriage_condition(fam);
        const auto t = find_transversal(fam);
        bool ok = marriage == t.has_value();
        if (t) ok = ok && is_valid_transversal(fam, *t);
        if (fam.member_count() <= 10) {
            const auto all = all_transversals(fam);
            ok = ok && (marriage == !all.empty());
            for (const auto& tr : all) ok = ok && is_valid_transversal(fam, tr);
        }
        rec.check(ok, "disagreement on " + detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 5); ++n)
        gen::for_each_family_multiset(n, 1, n + 1, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 500 && rec.r.pass; ++i) {
        const int n = gen::uniform_int(rng, 1, 8);
        check_family(gen::random_family(rng, n, gen::uniform_int(rng, 1, 8)));
    }
    return rec.done("marriage condition, transversal search, and enumeration agree");
}

/**
 * Matching/subset agreement: the augmenting-path marriage predicate matches
 * the exponential subset-union check.  bound = max ground size of the
 * exhaustive sweep.
 */
inline suite_result verify_matching_agreement(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("matching-agreement");
    auto check_family = [&](const set_family& fam) {
        rec.check(satisfies_marriage_condition(fam) == marriage_condition_by_subsets(fam),
                  "disagreement on " + detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 5); ++n)
        gen::for_each_family_multiset(n, 1, n + 1, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 600 && rec.r.pass; ++i) {
        const int n = gen::uniform_int(rng, 1, 8);
        check_family(gen::random_family(rng, n, gen::uniform_int(rng, 1, 8)));
    }
    return rec.done("matching and subset-enumeration marriage checks agree");
}

/**
 * Chang equivalence: a family of non-empty members is shellable iff it has
 * exactly one transversal.  Exhaustive sweep up to the bound plus 1000
 * seeded random families with ground size up to 7.
 */
inline suite_result verify_chang_equivalence(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("chang-equivalence");
    auto check_family = [&](const set_family& fam) {
        const bool shellable = is_shellable(fam);
        const bool unique = count_transversals_up_to(fam, 2) == 1;
        bool ok = shellable == unique;
        if (ok && fam.member_count() <= 10)
            ok = shellable == (all_transversals(fam).size() == 1);
        rec.check(ok, "equivalence fails on " + detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 4); ++n)
        gen::for_each_family_multiset(n, 1, n + 1, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000 && rec.r.pass; ++i) {
        const int n = gen::uniform_int(rng, 1, 7);
        const int kind = gen::uniform_int(rng, 0, 4);
        if (kind <= 1) {
            check_family(gen::random_family(rng, n, gen::uniform_int(rng, 1, 7)));
        } else if (kind <= 3) {
            check_family(gen::random_shellable_family(rng, n));
        } else {
            auto fam = gen::random_shellable_family(rng, n);
            auto members = fam.members();
            auto& target = members[static_cast<std::size_t>(gen::uniform_int(
                rng, 0, static_cast<int>(members.size()) - 1))];
            target.push_back(gen::uniform_int(rng, 1, n));
            check_family(set_family(n, std::move(members)));
        }
    }
    return rec.done("shellable iff exactly one transversal");
}

/**
 * Non-emptiness of the unique-element set: every shellable family has at
 * least one element covered by exactly one member.  bound = max ground size
 * of the exhaustive sweep.
 */
inline suite_result verify_lemma_not_empty(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("lemma-not-empty");
    for (int n = 1; n <= std::min(bound, 5); ++n) {
        gen::for_each_family_multiset(n, 1, n, [&](const set_family& fam) {
            if (!is_shellable(fam)) return;
            rec.check(!unique_element_set(fam).empty(),
                      "empty unique-element set on " + detail::describe_family(fam));
        });
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 300 && rec.r.pass; ++i) {
        const auto fam = gen::random_shellable_family(rng, gen::uniform_int(rng, 1, 8));
        rec.check(!unique_element_set(fam).empty(),
                  "empty unique-element set on " + detail::describe_family(fam));
    }
    return rec.done("every shellable family has a uniquely covered element");
}

/**
 * Greedy completeness: the backward-peel search finds a shelling order
 * exactly when exhaustive search over all member orderings finds one.
 * bound = max ground size of the exhaustive sweep.
 */
inline suite_result verify_greedy_completeness(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("greedy-completeness");
    auto check_family = [&](const set_family& fam) {
        const auto greedy = find_shelling_order(fam);
        const bool brute = detail::shelling_order_exists_bruteforce(fam);
        bool ok = greedy.has_value() == brute;
        if (greedy) ok = ok && verify_shelling_order(fam, *greedy);
        rec.check(ok, "greedy/brute disagreement on " + detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 4); ++n)
        gen::for_each_family_multiset(n, 1, n + 1, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 300 && rec.r.pass; ++i) {
        const int n = gen::uniform_int(rng, 1, 6);
        if (gen::uniform_int(rng, 0, 1) == 0)
            check_family(gen::random_family(rng, n, gen::uniform_int(rng, 1, 6)));
        else
            check_family(gen::random_shellable_family(rng, n));
    }
    return rec.done("greedy peel finds an order exactly when one exists");
}

/**
 * Witness-to-shelling extraction: for every shellable family and every
 * surjective word satisfying the maximal configuration f1, sorting members
 * by the word value at their representative yields a valid shelling order.
 * bound = max ground size of the exhaustive sweep.
 */
inline suite_result verify_witness_shelling(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("witness-shelling");
    auto check_family = [&](const set_family& fam, const transversal& t) {
        const auto f1 = detail::maximal_configuration(fam);
        const auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi; ++m) {
            for_each_surjective_word(fam.ground_size(), m, [&](const std::vector<int>& values) {
                if (!rec.r.pass) return;
                surjective_word w(m, values);
                if (!satisfies(w, fam, t, f1)) return;
                try {
                    const auto ord = shelling_order_from_witness(fam, t, w);
                    rec.check(verify_shelling_order(fam, ord),
                              "invalid order from witness on " + detail::describe_family(fam));
                } catch (const error&) {
                    rec.check(false, "witness extraction threw on " + detail::describe_family(fam));
                }
            });
        }
    };
    for (int n = 1; n <= std::min(bound, 5); ++n) gen::for_each_shellable_family(n, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100 && rec.r.pass; ++i) {
        const auto fam = gen::random_shellable_family(rng, gen::uniform_int(rng, 1, 5));
        const auto t = find_transversal(fam);
        if (t) check_family(fam, *t);
    }
    return rec.done("every maximal-configuration witness yields a valid shelling order");
}

/**
 * Main theorem, forward direction: for a shellable family, every
 * configuration is satisfied by at least one surjective word for every m in
 * the theorem range, and the constructive solver produces such a word.
 * bound = max ground size of the exhaustive sweep.
 */
inline suite_result verify_good_marriage_forward(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("good-marriage-forward");
    auto check_family = [&](const set_family& fam, const transversal& t, bool all_configs) {
        const auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi && rec.r.pass; ++m) {
            const auto hist = detail::configuration_histogram(fam, t, m);
            rec.check(bigint(hist.size()) == total_configuration_count(fam),
                      "some configuration unsatisfied at m=" + std::to_string(m) + " on " +
                          detail::describe_family(fam));
            std::mt19937_64 config_rng(default_verify_seed + static_cast<std::uint64_t>(m));
            auto check_config = [&](const std::vector<int>& demands) {
                if (!rec.r.pass) return;
                const configuration f(demands);
                const auto w = solve(fam, t, f, m);
                rec.check(w.has_value() && satisfies(*w, fam, t, f),
                          "solve failed at m=" + std::to_string(m) + " on " +
                              detail::describe_family(fam));
            };
            if (all_configs) {
                for_each_configuration(fam, t, check_config);
            } else {
                for (int i = 0; i < 20; ++i) {
                    std::vector<int> demands;
                    for (const auto& mem : fam.members())
                        demands.push_back(gen::uniform_int(config_rng, 1,
                                                           static_cast<int>(mem.size())));
                    check_config(demands);
                }
            }
        }
    };
    for (int n = 1; n <= std::min(bound, 5); ++n)
        gen::for_each_shellable_family(n, [&](const set_family& fam, const transversal& t) {
            check_family(fam, t, true);
        });
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 150 && rec.r.pass; ++i) {
        const auto fam = gen::random_shellable_family(rng, gen::uniform_int(rng, 5, 6));
        const auto t = find_transversal(fam);
        if (t) check_family(fam, *t, false);
    }
    return rec.done("every configuration of a shellable family is satisfiable; solver verified");
}

/**
 * Main theorem, converse: a non-shellable family with a transversal has a
 * configuration (the maximal one) with zero satisfying words for every m in
 * the theorem range.  bound = max ground size of the exhaustive sweep.
 */
inline suite_result verify_good_marriage_converse(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("good-marriage-converse");
    auto check_family = [&](const set_family& fam) {
        const auto t = find_transversal(fam);
        if (!t || is_shellable(fam)) return;
        const auto f1 = detail::maximal_configuration(fam);
        const auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi; ++m)
            rec.check(count_satisfying(fam, *t, f1, m) == 0,
                      "maximal configuration satisfiable at m=" + std::to_string(m) + " on " +
                          detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 4); ++n)
        gen::for_each_family_multiset(n, n, n, check_family);
    std::mt19937_64 rng(seed);
    int produced = 0;
    for (int attempts = 0; produced < 200 && attempts < 4000 && rec.r.pass; ++attempts) {
        const int n = gen::uniform_int(rng, 5, 6);
        const auto fam = gen::random_family(rng, n, n);
        if (!find_transversal(fam) || is_shellable(fam)) continue;
        check_family(fam);
        ++produced;
    }
    return rec.done("maximal configuration unsatisfiable for non-shellable families");
}

/**
 * Partition identity: for a shellable family and m in the theorem range,
 * the words [n] -> [m] partition across configurations (sum of counts =
 * m! S(n,m)), every configuration is hit, and the brute-force average
 * equals the formula average.  bound = max ground size of the sweep.
 */
inline suite_result verify_partition_identity(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("partition-identity");
    auto check_family = [&](const set_family& fam, const transversal& t) {
        const int n = fam.ground_size();
        const auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi && rec.r.pass; ++m) {
            const auto hist = detail::configuration_histogram(fam, t, m);
            bigint total = 0;
            for (const auto& [demands, count] : hist) total += count;
            bool ok = total == surjection_count(n, m);
            ok = ok && bigint(hist.size()) == total_configuration_count(fam);
            ok = ok && average_bruteforce(fam, t, m) == average_formula(fam, m);
            rec.check(ok, "partition identity fails at m=" + std::to_string(m) + " on " +
                              detail::describe_family(fam));
        }
    };
    for (int n = 1; n <= std::min(bound, 5); ++n) gen::for_each_shellable_family(n, check_family);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100 && rec.r.pass; ++i) {
        const auto fam = gen::random_shellable_family(rng, gen::uniform_int(rng, 1, 6));
        const auto t = find_transversal(fam);
        if (t) check_family(fam, *t);
    }
    return rec.done("surjective words partition across configurations; averages agree");
}

/**
 * Duality: for any family with n members over [n] and a transversal, a
 * permutation w satisfies the all-ones configuration iff its reversal
 * i -> n - w(i) + 1 satisfies the maximal configuration.  bound = max
 * ground size of the exhaustive sweep over families; permutations are
 * always exhausted.
 */
inline suite_result verify_duality(int bound, std::uint64_t seed) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("duality");
    auto check_family = [&](const set_family& fam) {
        const auto t = find_transversal(fam);
        if (!t) return;
        const int n = fam.ground_size();
        const auto f0 = detail::minimal_configuration(fam);
        const auto f1 = detail::maximal_configuration(fam);
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
        bool ok = true;
        do {
            std::vector<int> reversed(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                reversed[static_cast<std::size_t>(i)] = n + 1 - values[static_cast<std::size_t>(i)];
            const bool lhs = satisfies(surjective_word(n, values), fam, *t, f0);
            const bool rhs = satisfies(surjective_word(n, reversed), fam, *t, f1);
            if (lhs != rhs) {
                ok = false;
                break;
            }
        } while (std::next_permutation(values.begin(), values.end()));
        rec.check(ok, "duality fails on " + detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 4); ++n)
        gen::for_each_family_multiset(n, n, n, check_family);
    if (bound >= 5)
        gen::for_each_shellable_family(
            5, [&](const set_family& fam, const transversal&) { check_family(fam); });
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50 && rec.r.pass; ++i)
        check_family(gen::random_shellable_family(rng, gen::uniform_int(rng, 1, 5)));
    return rec.done("all-ones and maximal configurations are reversal duals");
}

/**
 * Hook-family shellability: the hook family of every skew shape is
 * shellable, and its unique transversal is the identity (each hook
 * represented by its own corner cell).  bound = max cell count.
 */
inline suite_result verify_hook_shellability(int bound, std::uint64_t /*seed*/) {
    if (bound <= 0) bound = 9;
    detail::suite_recorder rec("hook-shellability");
    gen::for_each_skew_shape(std::min(bound, 9), [&](const skew_shape& shape) {
        if (!rec.r.pass) return;
        const auto hf = hook_family(shape);
        bool ok = is_shellable(hf.family);
        ok = ok && count_transversals_up_to(hf.family, 2) == 1;
        const auto t = find_transversal(hf.family);
        ok = ok && t.has_value() && t->assignment() == hf.rep.assignment();
        rec.check(ok, "hook family not uniquely shellable for " + detail::describe_shape(shape));
    });
    return rec.done("hook families are shellable with the identity transversal");
}

/**
 * Tableaux correspondences: for normal shapes, the hook-length formula, the
 * brute-force standard count, the all-ones satisfying-permutation count,
 * and the balanced-configuration count all agree; for skew shapes the
 * standard count equals the all-ones count.  bound = max cell count for
 * normal shapes (skew shapes are capped at 6 cells for runtime).
 */
inline suite_result verify_tableaux_correspondence(int bound, std::uint64_t /*seed*/) {
    if (bound <= 0) bound = 8;
    detail::suite_recorder rec("tableaux-correspondence");
    gen::for_each_partition(std::min(bound, 9), [&](const std::vector<int>& lambda) {
        if (!rec.r.pass) return;
        const skew_shape shape(lambda);
        const bigint standard = count_standard(shape);
        bool ok = hook_length_formula(shape) == standard;
        if (shape.cell_count() <= std::min(bound, 8)) {
            const auto hf = hook_family(shape);
            const int n = shape.cell_count();
            ok = ok && count_satisfying(hf.family, hf.rep,
                                        detail::minimal_configuration(hf.family), n) == standard;
            ok = ok && count_satisfying(hf.family, hf.rep, balanced_configuration(shape), n) ==
                           standard;
        }
        rec.check(ok, "correspondence fails for " + detail::describe_shape(shape));
    });
    gen::for_each_skew_shape(std::min(bound, 6), [&](const skew_shape& shape) {
        if (!rec.r.pass || shape.is_normal()) return;
        const auto hf = hook_family(shape);
        const bigint standard = count_standard(shape);
        rec.check(count_satisfying(hf.family, hf.rep, detail::minimal_configuration(hf.family),
                                   shape.cell_count()) == standard,
                  "skew correspondence fails for " + detail::describe_shape(shape));
    });
    return rec.done("standard, balanced, hook-length, and satisfying counts agree");
}

/**
 * Stirling consistency: the recurrence and the explicit alternating sum
 * agree for all 1 <= m <= n <= bound, and surjection counts match direct
 * enumeration for small n.
 */
inline suite_result verify_stirling_consistency(int bound, std::uint64_t /*seed*/) {
    if (bound <= 0) bound = 25;
    detail::suite_recorder rec("stirling-consistency");
    for (int n = 1; n <= bound; ++n)
        for (int m = 1; m <= n; ++m)
            rec.check(stirling2(n, m) == stirling2_explicit(n, m),
                      "stirling mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= n; ++m) {
            long long direct = 0;
            for_each_surjective_word(n, m, [&](const std::vector<int>&) { ++direct; });
            rec.check(surjection_count(n, m) == direct,
                      "surjection count mismatch at n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
        }
    }
    return rec.done("recurrence, explicit sum, and direct enumeration agree");
}

/**
 * Tail bound: for a shellable family and m in the theorem range, at least
 * (1 - 1/k) of the prod|F| configurations have count at most k times the
 * average, for k in {1, 2, 4}.  bound = max ground size of the sweep.
 */
inline suite_result verify_tail_bound(int bound, std::uint64_t /*seed*/) {
    if (bound <= 0) bound = 4;
    detail::suite_recorder rec("tail-bound");
    auto check_family = [&](const set_family& fam, const transversal& t) {
        const auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi && rec.r.pass; ++m) {
            const auto hist = detail::configuration_histogram(fam, t, m);
            const exact_rational avg = average_formula(fam, m);
            const bigint product = total_configuration_count(fam);
            for (const int k : {1, 2, 4}) {
                bigint within = 0;
                for (const auto& [demands, count] : hist)
                    if (exact_rational(count) <= exact_rational(k) * avg) ++within;
                const exact_rational required =
                    (exact_rational(1) - exact_rational(1, k)) * exact_rational(product);
                rec.check(exact_rational(within) >= required,
                          "tail bound fails at m=" + std::to_string(m) + " k=" +
                              std::to_string(k) + " on " + detail::describe_family(fam));
            }
        }
    };
    for (int n = 1; n <= std::min(bound, 5); ++n) gen::for_each_shellable_family(n, check_family);
    return rec.done("at most a 1/k fraction of configurations exceed k times the average");
}

/**
 * Closed-form consistency: the fixed-difference closed forms agree with the
 * general average formula wherever both are defined, over exhaustively
 * enumerated shellable families and over hook families of skew shapes.
 * bound = max ground size of the family sweep.
 */
inline suite_result verify_closed_form_consistency(int bound, std::uint64_t /*seed*/) {
    if (bound <= 0) bound = 5;
    detail::suite_recorder rec("closed-form-consistency");
    auto check_family = [&](const set_family& fam) {
        if (!is_shellable(fam)) return;
        const auto [lo, hi] = m_range(fam);
        for (int m = std::max(lo, fam.ground_size() - 2); m <= hi; ++m)
            rec.check(average_closed_form(fam, m) == average_formula(fam, m),
                      "closed form disagrees at m=" + std::to_string(m) + " on " +
                          detail::describe_family(fam));
    };
    for (int n = 1; n <= std::min(bound, 5); ++n)
        gen::for_each_family_multiset(n, n, n, check_family);
    gen::for_each_skew_shape(8, [&](const skew_shape& shape) {
        if (!rec.r.pass) return;
        check_family(hook_family(shape).family);
    });
    return rec.done("fixed-difference closed forms match the general formula");
}

/** Ordered ids of all property suites. */
inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "hall-equivalence",
        "matching-agreement",
        "chang-equivalence",
        "lemma-not-empty",
        "greedy-completeness",
        "witness-shelling",
        "good-marriage-forward",
        "good-marriage-converse",
        "partition-identity",
        "duality",
        "hook-shellability",
        "tableaux-correspondence",
        "stirling-consistency",
        "tail-bound",
        "closed-form-consistency",
    };
    return names;
}

/**
 * Runs the named property suite.  bound <= 0 selects the suite's default
 * size; the seed drives any randomized generation.  Unknown ids raise
 * invalid_input.
 */
inline suite_result run_verify_suite(const std::string& id, int bound = 0,
                                     std::uint64_t seed = default_verify_seed) {
    using suite_fn = suite_result (*)(int, std::uint64_t);
    static const std::map<std::string, suite_fn> suites = {
        {"hall-equivalence", &verify_hall_equivalence},
        {"matching-agreement", &verify_matching_agreement},
        {"chang-equivalence", &verify_chang_equivalence},
        {"lemma-not-empty", &verify_lemma_not_empty},
        {"greedy-completeness", &verify_greedy_completeness},
        {"witness-shelling", &verify_witness_shelling},
        {"good-marriage-forward", &verify_good_marriage_forward},
        {"good-marriage-converse", &verify_good_marriage_converse},
        {"partition-identity", &verify_partition_identity},
        {"duality", &verify_duality},
        {"hook-shellability", &verify_hook_shellability},
        {"tableaux-correspondence", &verify_tableaux_correspondence},
        {"stirling-consistency", &verify_stirling_consistency},
        {"tail-bound", &verify_tail_bound},
        {"closed-form-consistency", &verify_closed_form_consistency},
    };
    const auto it = suites.find(id);
    if (it == suites.end()) throw invalid_input("unknown verify suite: " + id);
    return it->second(bound, seed);
}

} // namespace halltab
