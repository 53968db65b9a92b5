#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"
#include "ucox/parallel.hpp"

using namespace ucox;
using testing::leaves_star;

TEST_SUITE("parallel") {

TEST_CASE("batch classes: parallel equals serial") {
    auto rng = rnd::case_rng(1, "parallel-unit", 5, 0);
    std::vector<std::vector<Word>> subs;
    for (int k = 0; k < 300; ++k) {
        std::vector<Word> hs;
        int m = rnd::uniform(rng, 1, 4);
        for (int q = 0; q < m; ++q) hs.push_back(rnd::random_word(rng, 5, rnd::uniform(rng, 1, 5)));
        subs.push_back(hs);
    }
    auto a = batch_classes(5, subs, Exec::Serial), b = batch_classes(5, subs, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].code == b[i].code);
}

TEST_CASE("compatibility filter and adjacency matrix: parallel equals serial") {
    auto rng = rnd::case_rng(2, "parallel-unit", 5, 0);
    std::vector<StarClass> stars;
    std::vector<FreeFactorClass> pool;
    for (int k = 0; k < 40; ++k) {
        auto g = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 3));
        auto s = act(g, leaves_star(5, {1, 5}));
        stars.push_back(s);
        pool.insert(pool.end(), s.corank1.begin(), s.corank1.end());
    }
    auto base = leaves_star(5, {1, 5}).corank1;
    CHECK(compatibility_filter(base, pool, Exec::Serial) == compatibility_filter(base, pool, Exec::Parallel));
    auto ms = adjacency_matrix(ComplexKind::X, stars, Exec::Serial);
    CHECK(ms == adjacency_matrix(ComplexKind::X, stars, Exec::Parallel));
    CHECK(ms.size() == stars.size() * stars.size());
}

TEST_CASE("kernel errors propagate") {
    std::vector<std::vector<Word>> subs{{Word::generator(3, 1)}, {Word(3)}};
    CHECK_THROWS(batch_classes(3, subs, Exec::Parallel));
    CHECK_THROWS(batch_classes(3, subs, Exec::Serial));
    CHECK(worker_count() >= 1);
}

}  // TEST_SUITE
