#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"

using namespace ucox;
using testing::cls;
using testing::gens;
using testing::leaves_star;
using testing::W;

TEST_SUITE("splitting") {

TEST_CASE("standard stars") {
    auto t0 = standard_star(4, {});
    CHECK(t0.edge_count() == 4);
    CHECK(t0.vertex_groups[0].empty());
    CHECK(validate(t0).ok);
    auto t1 = standard_star(5, {2, 3, 4});
    CHECK(t1.edge_count() == 2);
    CHECK(validate(t1).ok);
    CHECK(standard_star(5, {1, 2, 3, 4}).edge_count() == 1);
    CHECK_THROWS_AS(standard_star(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(standard_star(3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("star classes") {
    auto s = star_class(standard_star(5, {1, 2, 3, 4}));
    CHECK(s.k == 4);
    CHECK(s.corank1 == std::vector<FreeFactorClass>{cls(5, "1,2,3,4")});
    auto t = star_class(standard_star(5, {2, 3, 4}));
    CHECK(t.k == 3);
    CHECK(t.corank1.size() == 2);
    CHECK(StarClass::of(5, {cls(5, "2,3,4,5"), cls(5, "1,2,3,4")}) == t);
}

TEST_CASE("action on star classes") {
    auto s = star_class(standard_star(5, {1, 2, 3, 4}));
    CHECK(act(Automorphism::identity(5), s) == s);
    CHECK(act(swap_aut(5, 1, 5), s) == StarClass::of(5, {cls(5, "5,2,3,4")}));
    auto rng = rnd::case_rng(1, "splitting-unit", 5, 0);
    auto base = star_class(standard_star(5, {2, 3}));
    for (int k = 0; k < 100; ++k) CHECK(act(inner(rnd::random_word_upto(rng, 5, 6)), base) == base);
}

TEST_CASE("one-edge compatibility") {
    auto r = compatible_one_edge(cls(5, "2,3,4,5"), cls(5, "1,3,4,5"));
    REQUIRE(r);
    CHECK(r->cls == star_class(standard_star(5, {3, 4, 5})));
    CHECK_FALSE(compatible_one_edge(cls(5, "2,3,4,5"), cls(5, "2,1.3.1,4,5")));
    CHECK_THROWS_AS(compatible_one_edge(cls(5, "2,3,4,5"), cls(5, "2,3,4,5")), std::invalid_argument);
}

TEST_CASE("refinement") {
    auto one = refine({cls(5, "2,3,4,5")});
    REQUIRE(one);
    CHECK(one->cls.k == 4);
    // The left reference triangle: union of three corank-1 classes.
    std::vector<FreeFactorClass> u;
    for (auto& s : {leaves_star(5, {1, 5}), leaves_star(5, {2, 5}), leaves_star(5, {1, 2})})
        for (auto& c : s.corank1)
            if (std::find(u.begin(), u.end(), c) == u.end()) u.push_back(c);
    CHECK(u.size() == 3);
    auto r = refine(u);
    REQUIRE(r);
    CHECK(r->cls.k == 2);
    CHECK(r->cls == leaves_star(5, {1, 2, 5}));
    CHECK_THROWS_AS(refine_or_throw({cls(5, "2,3,4,5"), cls(5, "2,1.3.1,4,5")}), IncompatibleError);
}

TEST_CASE("refinement roundtrips on random stars") {
    auto rng = rnd::case_rng(2, "splitting-unit", 5, 0);
    for (int k = 0; k < 100; ++k) {
        int n = rnd::uniform(rng, 3, 6);
        auto center = rnd::random_subset(rng, n, rnd::uniform(rng, 0, n - 1));
        auto f = rnd::random_automorphism(rng, n, rnd::uniform(rng, 0, 6));
        auto s = star_class(act(f, standard_star(n, center)));
        auto r = refine(s.corank1);
        REQUIRE(r);
        CHECK(r->cls == s);
        CHECK(star_class(r->witness) == s);
        CHECK(validate(r->witness).ok);
    }
}

TEST_CASE("collapse and refines") {
    int n = 5;
    auto t = standard_star(n, {});
    for (int j = 0; j < n; ++j) {
        std::vector<int> others;
        for (int e = 0; e < n; ++e)
            if (e != j) others.push_back(e);
        auto c = star_class(collapse(t, others));
        std::vector<Word> rest;
        for (int i = 1; i <= n; ++i)
            if (i != j + 1) rest.push_back(Word::generator(n, i));
        CHECK(c == StarClass::of(n, {FreeFactorClass::of(n, rest)}));
        CHECK(refines(star_class(t), c));
        CHECK_FALSE(refines(c, star_class(t)));
    }
    CHECK_THROWS(collapse(t, {0, 1, 2, 3, 4}));
}

TEST_CASE("compatibility of stars") {
    CHECK(is_compatible(leaves_star(5, {1, 5}), leaves_star(5, {2, 5})));
    CHECK_FALSE(is_compatible(StarClass::of(5, {cls(5, "2,3,4,5")}), StarClass::of(5, {cls(5, "2,1.3.1,4,5")})));
}

TEST_CASE("validation") {
    SplittingTree bad;
    bad.rank = 3;
    bad.vertex_groups = {{}, {W(3, "1")}, {W(3, "2"), W(3, "3")}};
    bad.edges = {{0, 1}, {0, 2}};
    auto rep = validate(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.vertex == 0);
    CHECK(rep.reason == "trivial vertex of degree < 3");

    SplittingTree nf;
    nf.rank = 3;
    nf.vertex_groups = {{W(3, "1"), W(3, "2.1.2")}, {W(3, "3")}};
    nf.edges = {{0, 1}};
    auto r2 = validate(nf);
    CHECK_FALSE(r2.ok);
    CHECK(r2.vertex == 0);
    CHECK(r2.reason == "vertex group is not a free factor (no)");
}

TEST_CASE("blow-up and trivalent refinement") {
    auto t = standard_star(5, {});
    auto b = blow_up(t, 0, {1, 2});
    CHECK(b.vertex_count() == 7);
    CHECK(validate(b).ok);
    auto tri = trivalent_refinement(t);
    CHECK(validate(tri).ok);
    CHECK(tri.edge_count() == 2 * 5 - 3);
    for (int v = 0; v < tri.vertex_count(); ++v)
        if (tri.vertex_groups[v].empty()) CHECK(tri.degree(v) == 3);
}

TEST_CASE("free factor systems") {
    auto big = ffs_of(standard_star(5, {1, 2, 3, 4}));
    auto small = ffs_of(standard_star(5, {1, 2, 3}));
    CHECK(ffs_leq(small, big));
    CHECK_FALSE(ffs_leq(big, small));
}

TEST_CASE("complements") {
    auto c = complement(cls(5, "2.3.1.3.2,3,4,5"));
    REQUIRE(c);
    CHECK(is_involution(*c));
    auto t = one_edge_splitting(cls(5, "2.3.1.3.2,3,4,5"));
    CHECK(validate(t).ok);
}

}  // TEST_SUITE
