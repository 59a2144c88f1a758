#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rcg/permutation.hpp"

using namespace rcg;

namespace {
Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }
}

TEST_CASE("one-line basics and windows") {
    const Permutation w = P({3, 2, 1, 5, 4});
    CHECK(w(1) == 3);
    CHECK(w(5) == 4);
    CHECK(w(6) == 6);
    CHECK(w.window() == 5);
    CHECK(w.trimmed_window() == 5);

    const Permutation padded = P({2, 1, 3, 4});
    CHECK(padded.trimmed_window() == 2);
    CHECK(padded == P({2, 1}));
    CHECK(padded.one_line(3) == std::vector<int>{2, 1, 3});

    CHECK(Permutation().trimmed_window() == 0);
    CHECK(Permutation::identity(4) == Permutation());
    CHECK(P({1, 2, 3}) == Permutation());

    CHECK_THROWS_AS(P({2, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 4, 2}), std::invalid_argument);
}

TEST_CASE("composition acts on the right argument first") {
    const Permutation u = P({2, 1, 3});
    const Permutation v = P({1, 3, 2});
    CHECK(u * v == P({2, 3, 1}));
    CHECK(v * u == P({3, 1, 2}));
    CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
    CHECK(inverse(P({3, 1, 2})) * P({3, 1, 2}) == Permutation());
}

TEST_CASE("right transposition exchanges positions") {
    CHECK(right_transpose(P({2, 1, 3}), 2, 3) == P({2, 3, 1}));
    CHECK(right_transpose(P({2, 1, 3}), 1, 3) == P({3, 1, 2}));
    CHECK(right_transpose(Permutation(), 2, 5) == P({1, 5, 3, 4, 2}));
}

TEST_CASE("length and lehmer code") {
    const Permutation w = P({3, 2, 1, 5, 4});
    CHECK(length(w) == 4);
    CHECK(lehmer_code(w) == std::vector<int>{2, 1, 0, 1, 0});
    CHECK(length(Permutation()) == 0);
    CHECK(length(longest_element(4)) == 6);
    CHECK(longest_element(4) == P({4, 3, 2, 1}));
    CHECK(right_descents(P({3, 2, 1, 5, 4})) == std::vector<int>{1, 2, 4});
}

TEST_CASE("grassmannian permutations") {
    CHECK(grassmannian_permutation(1, 2) == P({3, 1, 2}));
    CHECK(grassmannian_permutation(2, 2) == P({1, 4, 2, 3}));
    CHECK(grassmannian_permutation(2, 3) == P({1, 5, 2, 3, 4}));
    CHECK(length(grassmannian_permutation(3, 4)) == 4);
    CHECK(grassmannian_permutation(2, 0) == Permutation());
    CHECK_THROWS_AS(grassmannian_permutation(0, 1), std::invalid_argument);
}

TEST_CASE("words") {
    CHECK(word_to_permutation({2, 1, 2, 4}) == P({3, 2, 1, 5, 4}));
    CHECK(word_to_permutation({}) == Permutation());
    CHECK(is_reduced(Word{2, 1, 2, 4}));
    CHECK_FALSE(is_reduced(Word{1, 1}));
    CHECK_FALSE(is_reduced(Word{1, 2, 1, 2}));
    CHECK_THROWS_AS(word_to_permutation({0}), std::invalid_argument);

    CHECK(reduced_words(P({3, 2, 1})) ==
          std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_words(P({2, 3, 1})) == std::vector<Word>{{1, 2}});
    CHECK(reduced_words(Permutation()) == std::vector<Word>{{}});
    CHECK(reduced_words(P({3, 2, 1, 5, 4})).size() == 8);
}

TEST_CASE("reduced words multiply back to w") {
    for (const Permutation& w : symmetric_group(4)) {
        const auto words = reduced_words(w);
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (const Word& word : words) {
            CHECK(static_cast<int>(word.size()) == length(w));
            CHECK(word_to_permutation(word) == w);
        }
    }
}

TEST_CASE("symmetric group enumeration") {
    CHECK(symmetric_group(1).size() == 1);
    CHECK(symmetric_group(3).size() == 6);
    CHECK(symmetric_group(4).size() == 24);
    const auto s3 = symmetric_group(3);
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK(s3.front() == Permutation());
    CHECK(s3.back() == P({3, 2, 1}));
}

TEST_CASE("text round trip") {
    CHECK(to_one_line_string(P({3, 2, 1, 5, 4})) == "3,2,1,5,4");
    CHECK(parse_one_line("3,2,1,5,4") == P({3, 2, 1, 5, 4}));
    CHECK(to_one_line_string(Permutation()) == "1");
    CHECK_THROWS_AS(parse_one_line(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_one_line("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_one_line("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_one_line("1,"), std::invalid_argument);
}
