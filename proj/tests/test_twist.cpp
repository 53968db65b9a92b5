#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"
#include "ucox/twist.hpp"

using namespace ucox;
using testing::gens;
using testing::W;

TEST_SUITE("twist") {

TEST_CASE("twist of the standard one-edge splitting") {
    auto t = standard_star(5, {1, 2, 3, 4});
    auto d = twist(t, 0, W(5, "2.3"));
    CHECK(d.apply(W(5, "5")) == W(5, "2.3.5.3.2"));
    for (int i = 1; i <= 4; ++i) CHECK(d.image(i) == Word::generator(5, i));
    CHECK(equal_exact(d, conj_generator(5, W(5, "2.3"))));
    CHECK(equal_exact(twist(t, 0, W(5, "e")), Automorphism::identity(5)));
    CHECK_THROWS_AS(twist(t, 0, W(5, "1.5")), std::invalid_argument);
    CHECK_THROWS_AS(twist(t, 3, W(5, "1")), std::invalid_argument);
}

TEST_CASE("twist on a conjugated tree conjugates the far side") {
    auto rng = rnd::case_rng(1, "twist-unit", 5, 0);
    for (int k = 0; k < 30; ++k) {
        auto f = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 5));
        auto t = act(f, standard_star(5, {2, 3, 4}));
        Word z = f.apply(rnd::random_word_in(rng, 5, {2, 3, 4}, rnd::uniform(rng, 1, 4)));
        auto d = twist(t, 1, z);
        CHECK(d.apply(f.image(5)) == z * f.image(5) * z.inverse());
        CHECK(d.apply(f.image(1)) == f.image(1));
    }
}

TEST_CASE("tree bases") {
    auto b = tree_basis(standard_star(4, {1, 2}));
    CHECK(b.size() == 4);
    CHECK(reduce_basis(b).has_value());
}

TEST_CASE("normalized stabilizer representatives") {
    std::vector<Word> a = gens(5, "1,2,3,4");
    Word leaf = W(5, "5");
    CHECK(equal_exact(normalize_stabilizer_rep(inner(W(5, "1")), a, leaf), Automorphism::identity(5)));
    // F_{5,z} moves the leaf; its normalized form is conjugation by z^-1 on A.
    Word z = W(5, "2.3");
    auto nz = normalize_stabilizer_rep(conj_generator(5, z), a, leaf);
    CHECK(nz.image(5) == leaf);
    for (int i = 1; i <= 4; ++i) CHECK(nz.image(i) == z.inverse() * Word::generator(5, i) * z);
    CHECK_THROWS_AS(normalize_stabilizer_rep(swap_aut(5, 1, 5), a, leaf), std::invalid_argument);
}

TEST_CASE("normalization recovers twist times automorphism of A") {
    auto rng = rnd::case_rng(2, "twist-unit", 5, 0);
    std::vector<Word> a = gens(5, "1,2,3,4");
    Word leaf = W(5, "5");
    for (int k = 0; k < 100; ++k) {
        Word z = rnd::random_word_in(rng, 5, {1, 2, 3, 4}, rnd::uniform(rng, 0, 5));
        std::vector<GeneratorMove> mv;
        int m = rnd::uniform(rng, 0, 5);
        for (int q = 0; q < m; ++q) {
            int i = rnd::uniform(rng, 1, 4), j = rnd::uniform(rng, 1, 3);
            if (j >= i) ++j;
            mv.push_back(sigma_move(j, i));
        }
        auto alpha = Automorphism::from_moves(5, mv);
        Word h = rnd::random_word_upto(rng, 5, 3);
        auto f = compose(inner(h), compose(conj_generator(5, z), alpha));
        auto nf = normalize_stabilizer_rep(f, a, leaf);
        // D_z o alpha = ad_z o (ad_z^-1 on A, x_5 fixed) o alpha.
        CHECK(equal_exact(nf, compose(compose(inner(z.inverse()), conj_generator(5, z)), alpha)));
    }
}

}  // TEST_SUITE
