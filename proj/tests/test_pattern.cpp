#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "vinc/oracle.hpp"
#include "vinc/pattern.hpp"

using namespace vinc;

TEST_CASE("pattern parsing") {
    auto p = parse_pattern("124-3");
    CHECK(p.sigma() == Permutation({1, 2, 4, 3}));
    CHECK(p.adjacencies() == std::vector<int>{1, 2});
    CHECK(p.str() == "124-3");

    auto q = parse_pattern("12-34");
    CHECK(q.sigma() == Permutation({1, 2, 3, 4}));
    CHECK(q.adjacencies() == std::vector<int>{1, 3});
    CHECK(q.str() == "12-34");

    auto c = parse_pattern("1-3-2");
    CHECK(c.is_classical());
    CHECK(c.str() == "1-3-2");

    CHECK(parse_pattern(" 1 2 4 - 3 ") == p);
    CHECK(parse_pattern("123").is_consecutive());
    CHECK(!q.is_consecutive());

    CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("1-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("-12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("1--2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("122"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("10-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("1x2"), std::invalid_argument);
}

TEST_CASE("pattern set parsing normalizes") {
    auto set = parse_pattern_set("3-21, 32-1");
    REQUIRE(set.size() == 2);
    CHECK(set[0].str() == "32-1");
    CHECK(set[1].str() == "3-21");
    CHECK(parse_pattern_set("23-1,23-1").size() == 1);
    CHECK(format_pattern_set(set) == "32-1, 3-21");
    CHECK_THROWS_AS(parse_pattern_set("23-1,"), std::invalid_argument);
}

TEST_CASE("blocks and head") {
    auto q = parse_pattern("12-34");
    const std::vector<std::pair<int, int>> expect = {{1, 2}, {3, 2}};
    CHECK(q.blocks() == expect);

    CHECK(parse_pattern("124-3").head() == parse_pattern("123"));
    CHECK(parse_pattern("124-3").head_length() == 3);
    CHECK(parse_pattern("2-41-6-5-3").head() == parse_pattern("2-31"));
    CHECK(parse_pattern("1-3-2").head() == parse_pattern("1"));
    CHECK(parse_pattern("1-3-2").head_length() == 1);
    CHECK(parse_pattern("23-1").head() == parse_pattern("12"));
    CHECK(parse_pattern("1-32").head_length() == 3);
}

TEST_CASE("pattern symmetries") {
    CHECK(parse_pattern("12-3").reversed() == parse_pattern("3-21"));
    CHECK(parse_pattern("12-3").complemented() == parse_pattern("32-1"));
    CHECK(parse_pattern("23-1").reversed() == parse_pattern("1-32"));
    CHECK(parse_pattern("23-1").complemented() == parse_pattern("21-3"));
    CHECK(parse_pattern("124-3").reversed().reversed() == parse_pattern("124-3"));
    CHECK(parse_pattern("124-3").complemented().complemented() == parse_pattern("124-3"));

    auto rset = reverse_patterns(parse_pattern_set("12-3,23-1"));
    CHECK(rset == parse_pattern_set("3-21,1-32"));
}

TEST_CASE("containment fixtures") {
    CHECK(contains(Permutation({1, 6, 2, 5, 3, 4}), parse_pattern("1-2-43")));
    CHECK(!contains(Permutation({3, 1, 4, 2}), parse_pattern("23-1")));
    CHECK(contains(Permutation({2, 4, 1, 3}), parse_pattern("23-1")));
    CHECK(contains(Permutation({1, 3, 2}), parse_pattern("1-32")));
    CHECK(!contains(Permutation({2, 3, 1}), parse_pattern("1-32")));
    CHECK(contains(Permutation({1, 2, 3, 5, 4}), parse_pattern("124-3")));
    CHECK(!contains(Permutation({1, 2, 3, 4, 5}), parse_pattern("124-3")));
    CHECK(avoids_all(Permutation({2, 3, 1}), parse_pattern_set("1-32,12-3")));
    CHECK(!avoids_all(Permutation({2, 3, 1}), parse_pattern_set("1-32,23-1")));
}

TEST_CASE("head-in-prefix containment fixtures") {
    // 12354 contains 124-3 only via the copy 2,3,5;4 whose block ends at
    // position 4, outside a length-3 prefix.
    CHECK(contains(Permutation({1, 2, 3, 5, 4}), parse_pattern("124-3")));
    CHECK(!contains_with_head_in_prefix(Permutation({1, 2, 3, 5, 4}), 3,
                                        parse_pattern("124-3")));
    CHECK(contains_with_head_in_prefix(Permutation({1, 2, 3, 5, 4}), 4,
                                       parse_pattern("124-3")));
    CHECK(contains_with_head_in_prefix(Permutation({2, 4, 1, 3}), 2, parse_pattern("23-1")));
    CHECK(!contains_with_head_in_prefix(Permutation({2, 4, 1, 3}), 1, parse_pattern("23-1")));
    CHECK(!contains_with_head_in_prefix(Permutation({2, 4, 1, 3}), 0, parse_pattern("23-1")));
}

TEST_CASE("matcher agrees with the exhaustive reference") {
    const auto patterns = parse_pattern_set("124-3,12-34,1-3-2,23-1,132-4,1-23,1-32,123");
    for (int n = 0; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& host) {
            for (const auto& pat : patterns) {
                CHECK(contains(host, pat) == testref::ref_contains(host, pat));
                for (int k0 = 0; k0 <= n; ++k0) {
                    CHECK(contains_with_head_in_prefix(host, k0, pat) ==
                          testref::ref_contains_head(host, k0, pat));
                }
            }
        });
    }
}
