#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"

using namespace ucox;
using testing::W;

TEST_SUITE("aut") {

TEST_CASE("generator moves") {
    CHECK(sigma(3, 2, 1).apply(W(3, "2")) == W(3, "1.2.1"));
    CHECK(equal_exact(compose(sigma(3, 2, 1), sigma(3, 2, 1)), Automorphism::identity(3)));
    CHECK(F(4, 3).apply(W(4, "3")) == W(4, "1.2.3.2.1"));
    CHECK(F(4, 3).apply(W(4, "4")) == W(4, "4"));
    CHECK_THROWS_AS(F(4, 2), std::invalid_argument);
    CHECK(swap_aut(3, 1, 3).apply(W(3, "1.2")) == W(3, "3.2"));
    CHECK(partial_conj(4, {1, 3}, 2).images() == std::vector<Word>{W(4, "2.1.2"), W(4, "2"), W(4, "2.3.2"), W(4, "4")});
}

TEST_CASE("composition applies the right factor first") {
    auto f = sigma(3, 2, 1), g = sigma(3, 1, 3);
    auto fg = compose(f, g);
    for (int i = 1; i <= 3; ++i) CHECK(fg.image(i) == f.apply(g.image(i)));
}

TEST_CASE("conjugation of one generator") {
    auto f = conj_generator(5, W(5, "2.3"));
    CHECK(f.apply(W(5, "5")) == W(5, "2.3.5.3.2"));
    CHECK(f.apply(W(5, "1")) == W(5, "1"));
    // A trailing letter i is absorbed: x_i commutes with itself.
    CHECK(equal_exact(conj_generator(5, W(5, "2.5")), conj_generator(5, W(5, "2"))));
    CHECK_THROWS_AS(conj_generator(5, W(5, "5.2")), std::invalid_argument);
}

TEST_CASE("inverse and inner automorphisms") {
    auto rng = rnd::case_rng(1, "aut-unit", 4, 0);
    for (int k = 0; k < 50; ++k) {
        auto f = rnd::random_automorphism(rng, 4, rnd::uniform(rng, 0, 8));
        CHECK(equal_exact(compose(f, invert(f)), Automorphism::identity(4)));
        Word g = rnd::random_word_upto(rng, 4, 5);
        CHECK(inner(g).apply(W(4, "3")) == g * W(4, "3") * g.inverse());
    }
}

TEST_CASE("equality in Out") {
    auto h = equal_outer(inner(W(3, "1")), Automorphism::identity(3));
    REQUIRE(h);
    CHECK(*h == W(3, "1"));
    CHECK_FALSE(equal_outer(sigma(3, 2, 1), swap_aut(3, 1, 2)));
    auto rng = rnd::case_rng(2, "aut-unit", 5, 0);
    for (int k = 0; k < 200; ++k) {
        auto f = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 6));
        Word g = rnd::random_word_upto(rng, 5, 6);
        auto w = equal_outer(f, compose(inner(g), f));
        REQUIRE(w);
        CHECK(*w == g);
        CHECK(outer_key(f) == outer_key(compose(inner(g), f)));
    }
}

TEST_CASE("class permutation") {
    CHECK(class_permutation(sigma(4, 3, 1)) == std::vector<int>{1, 2, 3, 4});
    CHECK(in_Cn(sigma(4, 3, 1)));
    CHECK(class_permutation(swap_aut(4, 2, 4)) == std::vector<int>{1, 4, 3, 2});
    CHECK_FALSE(in_Cn(swap_aut(4, 2, 4)));
}

TEST_CASE("images without moves") {
    auto f = Automorphism::from_images_unchecked({W(3, "2"), W(3, "1"), W(3, "3")});
    CHECK_FALSE(f.has_moves());
    CHECK_THROWS(invert(f));
    CHECK_THROWS(Automorphism::from_images_unchecked({W(3, "1.2"), W(3, "1"), W(3, "3")}));
}

}  // TEST_SUITE
