#include <catch2/catch_amalgamated.hpp>

#include "halltab/counting.hpp"
#include "halltab/shapes.hpp"

using namespace halltab;

TEST_CASE("stirling2 recurrence matches known values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(1, 0) == 0);
    CHECK(stirling2(0, 1) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(18, 16) == 9996);
    CHECK(stirling2(10, 10) == 1);
    CHECK(stirling2(3, 5) == 0);
    CHECK_THROWS_AS(stirling2(-1, 0), invalid_input);
    CHECK_THROWS_AS(stirling2(0, -2), invalid_input);
}

TEST_CASE("explicit Stirling sum agrees with the recurrence") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n + 1; ++m)
            CHECK(stirling2_explicit(n, m) == stirling2(n, m));
}

TEST_CASE("surjection counts") {
    CHECK(surjection_count(3, 2) == 6);
    CHECK(surjection_count(4, 2) == 14);
    CHECK(surjection_count(5, 5) == 120);
    CHECK(surjection_count(2, 3) == 0);
    CHECK(surjection_count(1, 1) == 1);
    CHECK_THROWS_AS(surjection_count(0, 1), invalid_input);
    CHECK_THROWS_AS(surjection_count(3, 0), invalid_input);
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(17, 2) == 136);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(factorial(-1), invalid_input);
}

TEST_CASE("average_formula on pinned families") {
    // Hook family of the 2x2 square: sizes 3,2,2,1; only m = 4 is in range.
    auto sq = hook_family(skew_shape({2, 2}));
    CHECK(average_formula(sq.family, 4) == exact_rational(2));

    // One spare once-covered element widens the range.
    set_family spare(3, {{1}, {2}, {2, 3}});
    CHECK(average_formula(spare, 2) == exact_rational(3));
    CHECK(average_formula(spare, 3) == exact_rational(3));

    set_family lone(1, {{1}});
    CHECK(average_formula(lone, 1) == exact_rational(1));

    // Hypotheses: member count = n, shellable, m within the range.
    CHECK_THROWS_AS(average_formula(set_family(3, {{1}, {1, 2}}), 2), hypothesis_error);
    CHECK_THROWS_AS(average_formula(set_family(2, {{1, 2}, {1, 2}}), 2),
                    hypothesis_error);
    CHECK_THROWS_AS(average_formula(set_family(2, {{1}, {1, 2}}), 1), hypothesis_error);
    CHECK_THROWS_AS(average_formula(sq.family, 3), hypothesis_error);
}

TEST_CASE("average_bruteforce histograms the satisfiable configurations") {
    auto sq = hook_family(skew_shape({2, 2}));
    CHECK(average_bruteforce(sq.family, sq.rep, 4) == exact_rational(2));

    set_family spare(3, {{1}, {2}, {2, 3}});
    transversal t({1, 2, 3});
    CHECK(average_bruteforce(spare, t, 2) == exact_rational(3));

    // No hypothesis requirements: any family/transversal/m goes.
    set_family square(2, {{1, 2}, {1, 2}});
    transversal u({1, 2});
    CHECK(average_bruteforce(square, u, 2) == exact_rational(1));
    CHECK(average_bruteforce(square, u, 1) == exact_rational(1));

    set_family big(9, {{1, 2, 3, 4, 5, 6, 7, 8, 9}});
    CHECK_THROWS_AS(average_bruteforce(big, transversal({1}), 3),
                    oracle_limit_error);
}

TEST_CASE("average_closed_form covers codomain deficits up to two") {
    // Deficit 0: m = n reduces to m!/prod of sizes.
    auto sq = hook_family(skew_shape({2, 2}));
    CHECK(average_closed_form(sq.family, 4) == exact_rational(2));
    CHECK(average_closed_form(set_family(1, {{1}}), 1) == exact_rational(1));

    // Deficit 1.
    set_family spare(3, {{1}, {2}, {2, 3}});
    CHECK(average_closed_form(spare, 2) == exact_rational(3));
    CHECK(average_closed_form(spare, 3) == exact_rational(3));
    auto pair_hooks = hook_family(skew_shape({2, 1}, {1}));
    CHECK(average_closed_form(pair_hooks.family, 1) == exact_rational(1));

    // Deficit 2.
    set_family singletons(3, {{1}, {2}, {3}});
    CHECK(average_closed_form(singletons, 1) == exact_rational(1));
    CHECK(average_closed_form(singletons, 1) == average_formula(singletons, 1));

    // Larger deficits stay out of scope even when m is inside the range.
    set_family four(4, {{1}, {2}, {3}, {4}});
    CHECK_THROWS_AS(average_closed_form(four, 1), hypothesis_error);
    CHECK(average_closed_form(four, 2) == average_formula(four, 2));

    CHECK_THROWS_AS(average_closed_form(set_family(2, {{1, 2}, {1, 2}}), 2),
                    hypothesis_error);
}

TEST_CASE("the three averaging routes agree where they overlap") {
    const std::vector<set_family> families = {
        hook_family(skew_shape({2, 2})).family,
        hook_family(skew_shape({3, 1})).family,
        hook_family(skew_shape({2, 1}, {1})).family,
        set_family(3, {{1}, {2}, {2, 3}}),
        set_family(3, {{1}, {2}, {3}}),
        set_family(4, {{3}, {3, 1}, {1, 4}, {2, 3, 4}}),
    };
    for (const auto& fam : families) {
        auto t = find_transversal(fam);
        REQUIRE(t.has_value());
        auto [lo, hi] = m_range(fam);
        for (int m = lo; m <= hi; ++m) {
            exact_rational expected = average_bruteforce(fam, *t, m);
            CHECK(average_formula(fam, m) == expected);
            if (fam.ground_size() - m <= 2)
                CHECK(average_closed_form(fam, m) == expected);
        }
    }
}
