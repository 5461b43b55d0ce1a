#include "doctest.h"

#include "lenslift/braid.hpp"

#include <random>
#include <stdexcept>

using namespace lenslift;

namespace {

BraidWord random_word(std::mt19937& rng, int t, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> gen(1, t - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return BraidWord(t, std::move(w));
}

} // namespace

TEST_CASE("delta words match the defining expansion") {
    CHECK(delta(1).letters.empty());
    CHECK(delta(2).letters == std::vector<int>{1});
    CHECK(delta(3).letters == std::vector<int>{2, 1, 2});
    CHECK(delta(4).letters == std::vector<int>{3, 2, 1, 3, 2, 3});
    CHECK_THROWS_AS(delta(0), std::invalid_argument);
}

TEST_CASE("word operations") {
    BraidWord a(3, {1});
    BraidWord b(3, {-2});
    CHECK(concat(a, b).letters == std::vector<int>{1, -2});
    CHECK(inverse(BraidWord(3, {1, 2})).letters == std::vector<int>{-2, -1});
    CHECK(power(delta(2), -2).letters == std::vector<int>{-1, -1});
    CHECK_THROWS_AS(concat(a, BraidWord(4, {1})), std::invalid_argument);
    CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1, 2})).letters == std::vector<int>{2});
}

TEST_CASE("underlying permutation") {
    CHECK(underlying_permutation(BraidWord(2, {1})).img == std::vector<int>{1, 0});
    CHECK(underlying_permutation(BraidWord(5, {})).is_identity());
    // Delta_4 induces the order reversal (1 4)(2 3).
    CHECK(underlying_permutation(delta(4)) == Permutation::reversal(4));
}

TEST_CASE("permutation is a homomorphism onto concatenation") {
    std::mt19937 rng(20240601);
    for (int rep = 0; rep < 200; ++rep) {
        const int t = 2 + rep % 5;
        BraidWord a = random_word(rng, t, 8);
        BraidWord b = random_word(rng, t, 8);
        CHECK(underlying_permutation(concat(a, b)) ==
              underlying_permutation(a).then(underlying_permutation(b)));
    }
}

TEST_CASE("flip and reverse are involutions") {
    CHECK(flip(BraidWord(3, {1})).letters == std::vector<int>{2});
    CHECK(reverse(BraidWord(3, {1, 2})).letters == std::vector<int>{2, 1});
    std::mt19937 rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        BraidWord w = random_word(rng, 2 + rep % 4, 10);
        CHECK(flip(flip(w)) == w);
        CHECK(reverse(reverse(w)) == w);
    }
}

TEST_CASE("cable produces block transpositions") {
    CHECK(cable(BraidWord(2, {1}), 1) == BraidWord(2, {1}));
    const BraidWord c = cable(BraidWord(2, {1}), 2);
    CHECK(c.strands == 4);
    CHECK(c.letters.size() == 4);
    // Block swap of two 2-blocks: permutation (1 3)(2 4), zero-based (0 2)(1 3).
    CHECK(underlying_permutation(c).img == std::vector<int>{2, 3, 0, 1});
    CHECK(cable(BraidWord(3, {}), 4) == BraidWord(12, {}));
    CHECK_THROWS_AS(cable(BraidWord(2, {1}), 0), std::invalid_argument);

    // Cabling respects the underlying permutation blockwise.
    std::mt19937 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        const int t = 2 + rep % 3, n = 1 + rep % 3;
        BraidWord w = random_word(rng, t, 6);
        Permutation base = underlying_permutation(w);
        Permutation big = underlying_permutation(cable(w, n));
        for (int b = 0; b < t; ++b)
            for (int s = 0; s < n; ++s)
                CHECK(big[b * n + s] == base[b] * n + s);
    }
}

TEST_CASE("insert_pattern shifts a block pattern to the word end") {
    const BraidWord base = cable(BraidWord(2, {}), 2); // trivial on 4 strands
    CHECK(insert_pattern(base, 1, BraidWord(2, {1})).letters == std::vector<int>{1});
    CHECK(insert_pattern(base, 2, BraidWord(2, {1})).letters == std::vector<int>{3});
    CHECK_THROWS_AS(insert_pattern(base, 3, BraidWord(2, {1})), std::invalid_argument);
    CHECK_THROWS_AS(insert_pattern(base, 1, BraidWord(3, {1})), std::invalid_argument);
}

TEST_CASE("braid text format round-trips") {
    const BraidWord w(3, {2, 1, 2});
    CHECK(to_text(w) == "t=3 2 1 2");
    CHECK(parse_braid("t=3 2 1 2") == w);
    CHECK(parse_braid("t=5") == BraidWord(5, {}));
    CHECK_THROWS_AS(parse_braid("3 2 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("t=3 2 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("t=2 5"), std::invalid_argument);

    std::mt19937 rng(123);
    for (int rep = 0; rep < 50; ++rep) {
        BraidWord w2 = random_word(rng, 2 + rep % 5, 12);
        CHECK(parse_braid(to_text(w2)) == w2);
    }
}
