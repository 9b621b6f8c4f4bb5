#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <variant>

#include "vinc/evaluate.hpp"
#include "vinc/oracle.hpp"

using namespace vinc;

namespace {

Scheme discovered(const std::string& patterns, DiscoveryParams params = {}) {
    DiscoveryResult result = discover(parse_pattern_set(patterns), params);
    REQUIRE(std::holds_alternative<Scheme>(result));
    return std::get<Scheme>(result);
}

std::vector<BigInt> big(const std::vector<long long>& values) {
    return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("the worked scheme counts set partitions") {
    Evaluator eval(discovered("23-1", {.max_depth = 2, .max_gap_norm = 2}));
    CHECK(eval.count(0) == 1);
    CHECK(eval.sequence(10) ==
          big({1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975}));
    CHECK(eval.sequence(1) == big({1}));
}

TEST_CASE("the classical scheme counts ballot sequences") {
    Evaluator eval(discovered("1-3-2", {.max_depth = 2, .max_gap_norm = 2}));
    CHECK(eval.sequence(10) ==
          big({1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796}));
}

TEST_CASE("level-four sequences match their pinned values") {
    CHECK(sequence(discovered("12-3-4"), 10) ==
          big({1, 2, 6, 23, 105, 550, 3228, 20878, 146994, 1116000}));
    CHECK(sequence(discovered("1-23-4"), 10) ==
          big({1, 2, 6, 23, 105, 549, 3207, 20577, 143239, 1071704}));
    CHECK(sequence(discovered("123-4"), 7) == big({1, 2, 6, 23, 108, 598, 3815}));
    CHECK(sequence(discovered("1-24-3"), 7) == big({1, 2, 6, 23, 104, 532, 3004}));
}

TEST_CASE("scheme counts agree with brute force") {
    for (const char* patterns : {"23-1", "1-3-2", "1-32", "12-3"}) {
        auto parsed = parse_pattern_set(patterns);
        Evaluator eval(discovered(patterns));
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(patterns);
            CAPTURE(n);
            CHECK(eval.count(n) == brute_count(n, parsed));
        }
    }
}

TEST_CASE("the six-pattern tail scheme counts match brute force") {
    std::string text = "12-3-4-5, 12-3-5-4, 12-4-3-5, 12-4-5-3, 12-5-3-4, 12-5-4-3";
    auto patterns = parse_pattern_set(text);
    Evaluator eval(discovered(text, {.max_depth = 2, .max_gap_norm = 3}));
    for (int n = 0; n <= 8; ++n) CHECK(eval.count(n) == brute_count(n, patterns));
}

TEST_CASE("guaranteed and complemented schemes count correctly") {
    Evaluator tail(guaranteed_scheme(parse_pattern_set("12-3")));
    Evaluator searched(discovered("12-3"));
    auto tail_patterns = parse_pattern_set("12-3");
    for (int n = 0; n <= 8; ++n) {
        BigInt expected = brute_count(n, tail_patterns);
        CHECK(tail.count(n) == expected);
        CHECK(searched.count(n) == expected);
    }

    Evaluator mixed(guaranteed_scheme(parse_pattern_set("21-3, 321")));
    auto mixed_patterns = parse_pattern_set("21-3, 321");
    for (int n = 0; n <= 8; ++n)
        CHECK(mixed.count(n) == brute_count(n, mixed_patterns));

    Evaluator flipped(complement_scheme(discovered("23-1")));
    auto flipped_patterns = parse_pattern_set("21-3");
    for (int n = 0; n <= 8; ++n)
        CHECK(flipped.count(n) == brute_count(n, flipped_patterns));
}

TEST_CASE("inversion refinement reproduces the pinned triangle") {
    Evaluator eval(discovered("1-32"));
    std::vector<std::vector<long long>> rows = {
        {1},
        {1},
        {1, 1},
        {1, 1, 2, 1},
        {1, 1, 2, 4, 3, 3, 1},
        {1, 1, 2, 4, 7, 8, 9, 9, 6, 4, 1},
    };
    for (size_t n = 0; n < rows.size(); ++n) {
        QPolynomial row = eval.count_by_inversions(static_cast<int>(n));
        CHECK(row == QPolynomial(big(rows[n])));
    }
}

TEST_CASE("inversion refinement agrees with brute force") {
    for (const char* patterns : {"1-32", "23-1"}) {
        auto parsed = parse_pattern_set(patterns);
        Evaluator eval(discovered(patterns));
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(patterns);
            CAPTURE(n);
            CHECK(eval.count_by_inversions(n) == brute_count_by_inversions(n, parsed));
        }
    }
}

TEST_CASE("refined counts evaluate to plain counts at q one") {
    for (const char* patterns : {"1-32", "23-1", "12-3"}) {
        Evaluator eval(discovered(patterns));
        for (int n = 0; n <= 10; ++n)
            CHECK(eval.count_by_inversions(n).total() == eval.count(n));
    }
}

TEST_CASE("low inversion coefficients stagnate and reach their limits") {
    Evaluator eval(discovered("1-32"));
    std::map<int, QPolynomial> rows;
    for (int n = 0; n <= 10; ++n) rows[n] = eval.count_by_inversions(n);
    for (int k = 0; k <= 6; ++k) {
        BigInt settled = rows[k + 1].coeff(k);
        for (int n = k + 1; n <= 10; ++n) CHECK(rows[n].coeff(k) == settled);
    }
    std::vector<long long> limits = {1, 1, 2, 4, 7, 13, 22, 38, 63, 105};
    for (int k = 0; k <= 9; ++k) CHECK(rows[k + 1].coeff(k) == BigInt(limits[k]));
}

TEST_CASE("deleting prefix positions shifts inversions by a constant") {
    CHECK(inversion_increment({3, 1}, 4, {1}) == 2);
    CHECK(inversion_increment({1, 2}, 6, {1}) == 0);
    CHECK(inversion_increment({3, 1}, 4, {}) == 0);

    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            if (a == b) continue;
            std::vector<int> word = {a, b};
            for (const std::vector<int>& rset :
                 {std::vector<int>{1}, {2}, {1, 2}}) {
                long long expected = inversion_increment(word, 4, rset);
                for (const Permutation& pi : brute_avoiders_with_prefix(4, word, {})) {
                    Permutation image = delete_positions(pi, rset);
                    CHECK(inversions(pi) - inversions(image) == expected);
                }
            }
        }
    }
    CHECK_THROWS_AS(inversion_increment({3, 1}, 4, {3}), std::invalid_argument);
}

TEST_CASE("prefix counts depend only on the reduced prefix and its spacing") {
    std::vector<std::string> corpus = {"23-1", "1-32", "124-3", "12-3"};
    for (const std::string& text : corpus) {
        auto patterns = parse_pattern_set(text);
        for (int n = 2; n <= 7; ++n) {
            auto avoiders = brute_avoiders(n, patterns);
            for (int t = 1; t <= std::min(3, n); ++t) {
                std::map<std::vector<int>, long long> by_word;
                for (const Permutation& pi : avoiders) {
                    std::vector<int> word(pi.letters().begin(),
                                          pi.letters().begin() + t);
                    ++by_word[word];
                }
                std::map<std::pair<std::vector<int>, std::vector<int>>, long long>
                    by_state;
                std::vector<int> word(t);
                std::vector<char> used(n + 1, 0);
                auto walk = [&](auto&& self, int depth) -> void {
                    if (depth == t) {
                        auto state = std::pair(reduce(word).letters(),
                                               spacing_vector(n, word).comps);
                        auto it = by_word.find(word);
                        long long count = it == by_word.end() ? 0 : it->second;
                        auto [slot, inserted] = by_state.emplace(state, count);
                        CAPTURE(text);
                        CAPTURE(n);
                        CHECK(slot->second == count);
                        (void)inserted;
                        return;
                    }
                    for (int v = 1; v <= n; ++v) {
                        if (used[v]) continue;
                        used[v] = 1;
                        word[depth] = v;
                        self(self, depth + 1);
                        used[v] = 0;
                    }
                };
                walk(walk, 0);
            }
        }
    }
}

TEST_CASE("evaluator rejects bad input") {
    Scheme broken = discovered("23-1");
    broken.triples.erase(Permutation({2, 1}));
    CHECK_THROWS_AS(Evaluator{broken}, std::invalid_argument);

    Evaluator eval(discovered("23-1"));
    CHECK_THROWS_AS(eval.count(-1), std::invalid_argument);
    CHECK_THROWS_AS(eval.count_by_inversions(-2), std::invalid_argument);
}
