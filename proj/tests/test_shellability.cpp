#include <catch2/catch_amalgamated.hpp>

#include "halltab/shellability.hpp"

using namespace halltab;

TEST_CASE("shelling_order must be a permutation of member indices") {
    shelling_order ord({2, 1, 3});
    CHECK(ord.size() == 3);
    CHECK(ord.at(1) == 2);
    CHECK(ord.order() == std::vector<int>{2, 1, 3});

    CHECK_THROWS_AS(shelling_order({1, 3}), invalid_input);
    CHECK_THROWS_AS(shelling_order({2, 2}), invalid_input);
    CHECK_THROWS_AS(ord.at(0), invalid_input);
    CHECK_THROWS_AS(ord.at(4), invalid_input);
}

TEST_CASE("verify_shelling_order checks the prefix-union law") {
    set_family chain(3, {{1}, {1, 2}, {1, 2, 3}});
    CHECK(verify_shelling_order(chain, shelling_order({1, 2, 3})));
    // First prefix {1,2,3} already has three elements, not one.
    CHECK_FALSE(verify_shelling_order(chain, shelling_order({3, 2, 1})));
    CHECK_FALSE(verify_shelling_order(chain, shelling_order({2, 1, 3})));
    // Wrong length is a malformed argument, not just a false answer.
    CHECK_THROWS_AS(verify_shelling_order(chain, shelling_order({1, 2})), invalid_input);
}

TEST_CASE("unique_element_set lists elements covered exactly once") {
    CHECK(unique_element_set(set_family(3, {{1}, {1, 2}, {1, 2, 3}})) ==
          std::vector<int>{3});
    CHECK(unique_element_set(set_family(2, {{1, 2}, {1, 2}})).empty());
    // Duplicate members double the coverage of their elements.
    CHECK(unique_element_set(set_family(1, {{1}, {1}})).empty());
    CHECK(unique_element_set(set_family(3, {{2}, {1, 2, 3}})) ==
          std::vector<int>{1, 3});
}

TEST_CASE("find_shelling_order returns the greedy order when one exists") {
    set_family chain(3, {{1}, {1, 2}, {1, 2, 3}});
    auto ord = find_shelling_order(chain);
    REQUIRE(ord.has_value());
    CHECK(ord->order() == std::vector<int>{1, 2, 3});
    CHECK(verify_shelling_order(chain, *ord));

    // Members listed largest-first still resolve (peel works backwards).
    set_family reversed(3, {{1, 2, 3}, {1, 2}, {1}});
    auto rev = find_shelling_order(reversed);
    REQUIRE(rev.has_value());
    CHECK(verify_shelling_order(reversed, *rev));
    CHECK(rev->order() == std::vector<int>{3, 2, 1});

    CHECK_FALSE(find_shelling_order(set_family(2, {{1, 2}, {1, 2}})).has_value());
    // Member count differing from the union size fails the necessary check.
    CHECK_FALSE(find_shelling_order(set_family(3, {{1, 2, 3}})).has_value());

    auto empty = find_shelling_order(set_family(1, {}));
    REQUIRE(empty.has_value());
    CHECK(empty->size() == 0);

    CHECK_THROWS_AS(find_shelling_order(set_family(2, {{1}, {}})), empty_member_error);
}

TEST_CASE("shellability matches the unique-transversal characterization") {
    const std::vector<std::pair<set_family, bool>> cases = {
        {set_family(2, {{1, 2}, {1, 2}}), false}, // two transversals
        {set_family(3, {{1}, {1, 2}, {1, 2, 3}}), true},
        {set_family(3, {{2}, {1, 2, 3}}), false}, // two transversals
        {set_family(3, {{1}, {1}, {1, 2}}), false}, // none
        {set_family(1, {{1}}), true},
        {set_family(4, {{3}, {3, 1}, {1, 4}, {2, 3, 4}}), true},
    };
    for (const auto& [fam, expected] : cases) {
        CHECK(is_shellable(fam) == expected);
        CHECK(has_unique_transversal(fam) == expected);
    }
}

TEST_CASE("orders produced for shellable families always re-verify") {
    set_family tangled(4, {{2, 3}, {1, 2, 3, 4}, {3}, {2, 4}});
    REQUIRE(is_shellable(tangled));
    auto ord = find_shelling_order(tangled);
    REQUIRE(ord.has_value());
    CHECK(verify_shelling_order(tangled, *ord));
}
