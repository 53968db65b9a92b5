#include <doctest.h>

#include "helpers.hpp"
#include "ucox/oracles.hpp"

using namespace ucox;
using testing::gens;
using testing::W;

TEST_SUITE("subgroup") {

TEST_CASE("core of a standard subgroup is a bouquet of loops") {
    auto c = CoreGraph::from_generators(3, gens(3, "1,2"));
    CHECK(c.vertex_count() == 1);
    CHECK(c.next(0, 1) == 0);
    CHECK(c.next(0, 2) == 0);
    CHECK(c.next(0, 3) == CoreGraph::kNone);
}

TEST_CASE("hand folded core") {
    auto c = CoreGraph::from_generators(2, gens(2, "1,2.1.2"));
    CHECK(c.vertex_count() == 2);
    CHECK(c.next(0, 1) == 0);
    CHECK(c.next(0, 2) == 1);
    CHECK(c.next(1, 1) == 1);
    CHECK(c.next(1, 2) == 0);
    CHECK(kurosh_signature(c) == KuroshSignature{2, 0});
    CHECK_THROWS_AS(CoreGraph::from_generators(2, {Word(2)}), std::invalid_argument);
}

TEST_CASE("membership") {
    CHECK_FALSE(member(CoreGraph::from_generators(3, gens(3, "1,2")), W(3, "3")));
    CHECK(member(CoreGraph::from_generators(2, gens(2, "1,2.1.2")), W(2, "1.2.1.2")));
    CHECK(member(CoreGraph::from_generators(2, gens(2, "1,2.1.2")), W(2, "e")));
}

TEST_CASE("Kurosh signatures") {
    CHECK(kurosh_signature(CoreGraph::from_generators(4, gens(4, "1,2,3"))) == KuroshSignature{3, 0});
    CHECK(kurosh_signature(CoreGraph::from_generators(3, gens(3, "1.2"))) == KuroshSignature{0, 1});
}

TEST_CASE("conjugacy of subgroups") {
    auto a = CoreGraph::from_generators(5, gens(5, "2,3,4,5"));
    auto b = CoreGraph::from_generators(5, gens(5, "2,1.3.1,4,5"));
    CHECK_FALSE(conjugate_into(a, W(5, "3.1.3")));
    CHECK_FALSE(conjugate_subgroups(a, b));
    auto rng = rnd::case_rng(3, "subgroup-unit", 4, 0);
    for (int k = 0; k < 200; ++k) {
        std::vector<Word> hs;
        int m = rnd::uniform(rng, 1, 3);
        for (int q = 0; q < m; ++q) hs.push_back(rnd::random_word(rng, 4, rnd::uniform(rng, 1, 4)));
        Word g = rnd::random_word_upto(rng, 4, 5);
        std::vector<Word> conj;
        for (auto& h : hs) conj.push_back(g * h * g.inverse());
        auto ca = CoreGraph::from_generators(4, hs), cb = CoreGraph::from_generators(4, conj);
        auto w = conjugate_subgroups(ca, cb);
        REQUIRE(w);
        std::vector<Word> check;
        for (auto& h : hs) check.push_back(*w * h * w->inverse());
        CHECK(same_subgroup(CoreGraph::from_generators(4, check), cb));
        CHECK(canonical_code(ca) == canonical_code(cb));
    }
}

TEST_CASE("intersection") {
    auto a = CoreGraph::from_generators(5, gens(5, "2,3,4,5"));
    auto b = CoreGraph::from_generators(5, gens(5, "1,3,4,5"));
    auto c = intersect(a, b);
    CHECK(same_subgroup(c, CoreGraph::from_generators(5, gens(5, "3,4,5"))));
    auto rng = rnd::case_rng(4, "subgroup-unit", 5, 0);
    for (int k = 0; k < 500; ++k) {
        Word w = rnd::random_word_in(rng, 5, {1, 3, 4, 5, 2}, rnd::uniform(rng, 0, 8));
        CHECK(member(c, w) == (member(a, w) && member(b, w)));
    }
    auto trivial = intersect(CoreGraph::from_generators(3, gens(3, "1")), CoreGraph::from_generators(3, gens(3, "2")));
    CHECK(trivial.generators_from_core().empty());
    CHECK(kurosh_signature(trivial) == KuroshSignature{0, 0});
}

TEST_CASE("canonical codes decode to the same class") {
    auto c = CoreGraph::from_generators(4, gens(4, "1.2.1,3,2.4.2"));
    auto code = canonical_code(c);
    CHECK(canonical_code(decode_code(code)) == code);
    CHECK(code_size(code) == cyclic_core(c).vertex_count());
    CHECK_THROWS(decode_code("junk"));
}

TEST_CASE("free factor test") {
    auto r = is_free_factor(CoreGraph::from_generators(3, gens(3, "1,2,3")));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.moves_used == 0);
    CHECK(is_free_factor(CoreGraph::from_generators(2, gens(2, "1,2.1.2"))).verdict == Verdict::No);
    auto y = is_free_factor(CoreGraph::from_generators(5, gens(5, "2.3.1.3.2,3,4,5")));
    REQUIRE(y.verdict == Verdict::Yes);
    CHECK(y.moves_used == 2);
    REQUIRE(y.witness);
    std::vector<Word> std_gens;
    for (int i : y.standard_letters) std_gens.push_back(Word::generator(5, i));
    CHECK(same_subgroup(CoreGraph::from_generators(5, y.witness->apply(gens(5, "2.3.1.3.2,3,4,5"))),
                        CoreGraph::from_generators(5, std_gens)));
    CHECK_THROWS_AS(is_free_factor(CoreGraph::from_generators(3, gens(3, "1.2"))), std::invalid_argument);
}

TEST_CASE("free factors stay free factors under random automorphisms") {
    auto rng = rnd::case_rng(5, "subgroup-unit", 5, 0);
    for (int k = 0; k < 40; ++k) {
        auto f = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 5));
        auto sub = rnd::random_subset(rng, 5, rnd::uniform(rng, 1, 4));
        std::vector<Word> hs;
        for (int i : sub) hs.push_back(f.image(i));
        CHECK(is_free_factor(CoreGraph::from_generators(5, hs)).verdict == Verdict::Yes);
    }
}

TEST_CASE("basis reduction recovers the automorphism") {
    auto rng = rnd::case_rng(6, "subgroup-unit", 4, 0);
    for (int k = 0; k < 40; ++k) {
        auto f = rnd::random_automorphism(rng, 4, rnd::uniform(rng, 0, 6));
        auto b = reduce_basis(f.images());
        REQUIRE(b);
        CHECK(b->images() == f.images());
    }
    CHECK_FALSE(reduce_basis(gens(3, "1,2.1.2,3")));
}

TEST_CASE("partial conjugations") { CHECK(all_partial_conjugations(3).size() == 9); }

}  // TEST_SUITE
