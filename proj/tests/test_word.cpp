#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"

using namespace ucox;
using testing::W;

TEST_SUITE("word") {

TEST_CASE("reduce cancels adjacent equal letters") {
    CHECK(Word::reduce(3, {1, 1}).empty());
    CHECK(Word::reduce(3, {1, 2, 2, 3}).letters() == std::vector<int>{1, 3});
    CHECK(Word::reduce(3, {1, 2, 3, 3, 2, 1}).empty());
    CHECK_THROWS_AS(Word::reduce(3, {4}), std::invalid_argument);
    CHECK_THROWS_AS(Word::reduce(3, {0}), std::invalid_argument);
}

TEST_CASE("parse and print") {
    CHECK(W(3, "1.2.2.3").str() == "1.3");
    CHECK(W(3, "e").empty());
    CHECK(W(3, "1.1").str() == "e");
    CHECK_THROWS_AS(W(3, "1..2"), std::invalid_argument);
    CHECK_THROWS_AS(W(3, "a"), std::invalid_argument);
    CHECK_THROWS_AS(W(3, "5"), std::invalid_argument);
    CHECK(W(3, "").empty());
}

TEST_CASE("multiply and inverse") {
    CHECK((W(3, "1.2") * W(3, "2.1")).empty());
    CHECK(W(3, "1.2.3").inverse() == W(3, "3.2.1"));
    CHECK(power(W(3, "1.2"), 3) == W(3, "1.2.1.2.1.2"));
    CHECK(power(W(3, "1.2"), -1) == W(3, "2.1"));
}

TEST_CASE("cyclic reduction") {
    auto a = cyclic_reduce(W(3, "1.2.3.2.1"));
    CHECK(a.core == W(3, "3"));
    CHECK(a.conjugator == W(3, "1.2"));
    auto b = cyclic_reduce(W(3, "1.2"));
    CHECK(b.core == W(3, "1.2"));
    CHECK(b.conjugator.empty());
}

TEST_CASE("conjugacy") {
    auto g = are_conjugate(W(3, "1.2"), W(3, "2.1"));
    REQUIRE(g);
    CHECK(*g == W(3, "1"));
    CHECK_FALSE(are_conjugate(W(3, "1"), W(3, "2")));
    CHECK(canonical_conjugacy_rep(W(3, "3.1.2.1.3")) == W(3, "2"));
    CHECK(canonical_conjugacy_rep(W(3, "2.3.1")) == W(3, "1.2.3"));
}

TEST_CASE("involutions are odd palindromes") {
    auto inv = as_involution(W(3, "1.2.1"));
    REQUIRE(inv);
    CHECK(inv->conjugator == W(3, "1"));
    CHECK(inv->letter == 2);
    CHECK_FALSE(as_involution(W(3, "1.2")));
    CHECK_FALSE(as_involution(W(3, "e")));
    CHECK(is_involution(W(4, "4.3.2.1.2.3.4")));
}

TEST_CASE("word lists") {
    auto ws = parse_word_list(3, "1.2.1,3");
    REQUIRE(ws.size() == 2);
    CHECK(format_word_list(ws) == "1.2.1,3");
    CHECK(parse_word_list(3, "").empty());
}

TEST_CASE("conjugacy agrees with literal brute force on 500 pairs") {
    auto rng = rnd::case_rng(5, "word-unit", 3, 0);
    int conjugate = 0;
    for (int k = 0; k < 500; ++k) {
        int n = rnd::uniform(rng, 3, 4);
        Word w = rnd::random_word(rng, n, rnd::uniform(rng, 1, 4));
        Word v = rnd::uniform(rng, 0, 1) ? rnd::random_word(rng, n, rnd::uniform(rng, 1, 4)) : [&] {
            Word g = rnd::random_word_upto(rng, n, 3);
            return g * w * g.inverse();
        }();
        auto impl = are_conjugate(w, v);
        auto ref = oracle::conjugacy_brute_force(n, w.letters(), v.letters(), 6);
        CHECK(impl.has_value() == ref.has_value());
        conjugate += ref.has_value();
    }
    CHECK(conjugate > 200);
}

}  // TEST_SUITE
