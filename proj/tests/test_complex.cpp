#include <doctest.h>

#include "helpers.hpp"
#include "ucox/complex.hpp"
#include "ucox/oracles.hpp"

using namespace ucox;
using testing::cls;
using testing::leaves_star;

namespace {

struct Triangles {
    StarClass s1 = leaves_star(5, {1, 5});
    StarClass s2 = leaves_star(5, {2, 5});
    StarClass left = leaves_star(5, {1, 2});
    StarClass right = leaves_star(5, {3, 5});
};

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("kinds") {
    CHECK(parse_kind("Xprime") == ComplexKind::Xprime);
    CHECK(to_string(ComplexKind::Xtilde) == "Xtilde");
    CHECK_THROWS_AS(parse_kind("Z"), std::invalid_argument);
    Triangles f;
    CHECK(admissible(ComplexKind::X, f.s1));
    CHECK_FALSE(admissible(ComplexKind::Y, f.s1));
    CHECK_THROWS_AS(adjacent(ComplexKind::Y, f.s1, f.s2), std::invalid_argument);
}

TEST_CASE("adjacency examples") {
    Triangles f;
    CHECK(adjacent(ComplexKind::X, f.s1, f.s2));
    CHECK_FALSE(adjacent(ComplexKind::X, f.s1, f.s1));
    auto zero = leaves_star(5, {1, 2, 3, 4, 5});
    auto fstar = leaves_star(5, {2, 3, 4, 5});
    CHECK(adjacent(ComplexKind::L, zero, fstar));
    CHECK_FALSE(adjacent(ComplexKind::Y, StarClass::of(5, {cls(5, "2,3,4,5")}),
                         StarClass::of(5, {cls(5, "2,1.3.1,4,5")})));
    CHECK(adjacent(ComplexKind::Y, StarClass::of(5, {cls(5, "2,3,4,5")}), StarClass::of(5, {cls(5, "1,3,4,5")})));
}

TEST_CASE("triangle classification") {
    Triangles f;
    CHECK(triangle_type(f.s1, f.s2, f.left) == TriangleType::Wn3);
    CHECK(triangle_type(f.s1, f.s2, f.right) == TriangleType::Wn4);
    auto rng = rnd::case_rng(1, "complex-unit", 5, 0);
    for (int k = 0; k < 50; ++k) {
        auto g = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 6));
        CHECK(triangle_type(act(g, f.s1), act(g, f.s2), act(g, f.left)) == TriangleType::Wn3);
        CHECK(triangle_type(act(g, f.s1), act(g, f.s2), act(g, f.right)) == TriangleType::Wn4);
    }
}

TEST_CASE("fourth vertex") {
    Triangles f;
    auto r = fourth_vertex(f.s1, f.s2, f.right);
    REQUIRE(r.fourth);
    for (auto* s : {&f.s1, &f.s2, &f.right}) CHECK(adjacent(ComplexKind::X, *r.fourth, *s));
    CHECK(*r.fourth == leaves_star(5, {4, 5}));
    auto l = fourth_vertex(f.s1, f.s2, f.left);
    CHECK_FALSE(l.fourth);
    CHECK(l.bounded_search);
    CHECK(l.bound == 16);
    CHECK(l.candidates_checked == 126);
}

TEST_CASE("bounded neighborhoods") {
    Triangles f;
    auto b = neighbors_bounded(ComplexKind::X, f.s1);
    CHECK(b.vertices.front() == f.s1);
    CHECK(std::find(b.vertices.begin(), b.vertices.end(), f.s2) != b.vertices.end());
    CHECK(std::find(b.vertices.begin(), b.vertices.end(), f.left) != b.vertices.end());
    CHECK_FALSE(b.truncated);
    CHECK(b.vertices.size() == 127);
    CHECK(b.edges.size() == 651);
    CHECK(b.pool_size == 263);
    for (std::size_t v = 1; v < b.vertices.size(); ++v) CHECK(adjacent(ComplexKind::X, f.s1, b.vertices[v]));
}

TEST_CASE("simplex refinement") {
    // Four pairwise adjacent W_4-stars sharing one class of a W_1-star in W_6.
    auto base = leaves_star(6, {2, 3, 4, 5, 6});
    const auto& c = base.corank1;
    std::vector<StarClass> stars;
    for (int j = 1; j <= 4; ++j) stars.push_back(StarClass::of(6, {c[0], c[j]}));
    auto r = simplex_refinement(stars);
    CHECK(r.k == 1);
    CHECK(r == base);
    CHECK_THROWS_AS(simplex_refinement({stars[0], stars[1], stars[2]}), std::invalid_argument);
    auto big = leaves_star(6, {1, 2, 3, 4, 5, 6});
    std::vector<StarClass> six;
    for (int j = 1; j <= 5; ++j) six.push_back(StarClass::of(6, {big.corank1[0], big.corank1[j]}));
    six.push_back(six.front());
    CHECK_THROWS_AS(simplex_refinement(six), std::invalid_argument);
}

TEST_CASE("induced map X to X'") {
    auto s = leaves_star(5, {2, 3, 4, 5});  // W_1-star
    const auto& s0 = s.corank1[0];
    auto inter = intermediate_stars(s, s0);
    CHECK(inter.size() == 3);
    CHECK(induced_image_X_to_Xprime(s, s0, inter) == s);
    auto rng = rnd::case_rng(2, "complex-unit", 5, 0);
    for (int k = 0; k < 20; ++k) {
        auto g = rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 6));
        std::vector<StarClass> ims;
        for (auto& t : inter) ims.push_back(act(g, t));
        CHECK(induced_image_X_to_Xprime(s, s0, ims) == act(g, s));
    }
    // Images forming a triangle of the first type refine to the wrong center rank.
    Triangles f;
    CHECK_THROWS_AS(induced_image_X_to_Xprime(s, s0, {f.s1, f.s2, f.left}), IncompatibleError);
}

TEST_CASE("induced map Y to L") {
    auto zero = leaves_star(5, {1, 2, 3, 4, 5});
    std::vector<StarClass> ys;
    for (auto& c : zero.corank1) ys.push_back(StarClass::of(5, {c}));
    CHECK(induced_image_Y_to_L(ys) == zero);
    auto g = compose(sigma(5, 2, 1), compose(swap_aut(5, 3, 4), sigma(5, 5, 3)));
    std::vector<StarClass> gy;
    for (auto& y : ys) gy.push_back(act(g, y));
    CHECK(induced_image_Y_to_L(gy) == act(g, zero));
    ys.pop_back();
    auto fstar = induced_image_Y_to_L(ys);
    CHECK(fstar.k == 1);
    CHECK(adjacent(ComplexKind::L, zero, fstar));
    CHECK_THROWS_AS(induced_image_Y_to_L({ys[0], ys[1]}), std::invalid_argument);
}

TEST_CASE("exports") {
    auto empty = induced_ball(ComplexKind::X, {});
    CHECK(export_ball(empty, "dot") == "graph X {\n}\n");
    Triangles f;
    auto tri = induced_ball(ComplexKind::X, {f.s1, f.s2, f.left});
    CHECK(tri.vertices.size() == 3);
    CHECK(tri.edges.size() == 3);
    auto dot = export_ball(tri, "dot");
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 3 + 3);
    CHECK_THROWS_AS(export_ball(tri, "svg"), std::invalid_argument);
}

}  // TEST_SUITE
