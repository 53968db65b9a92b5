#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "ucox/io.hpp"
#include "ucox/oracles.hpp"
#include "ucox/verify.hpp"

using namespace ucox;
using testing::leaves_star;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("automorphism JSON roundtrip") {
    auto rng = rnd::case_rng(1, "io-unit", 4, 0);
    for (int k = 0; k < 20; ++k) {
        auto f = rnd::random_automorphism(rng, 4, rnd::uniform(rng, 0, 6));
        CHECK(equal_exact(aut_from_json(aut_to_json(f)), f));
    }
    json j = aut_to_json(sigma(3, 2, 1));
    j["images"][0] = "2";
    CHECK_THROWS_AS(aut_from_json(j), std::invalid_argument);
}

TEST_CASE("star, tree and ball JSON roundtrips") {
    auto s = leaves_star(5, {1, 5});
    CHECK(star_from_json(star_to_json(s)) == s);
    auto t = standard_star(5, {2, 3});
    CHECK(star_class(tree_from_json(tree_to_json(t))) == star_class(t));
    auto b = induced_ball(ComplexKind::X, {s, leaves_star(5, {2, 5})});
    auto b2 = ball_from_json(ball_to_json(b));
    CHECK(b2.vertices == b.vertices);
    CHECK(b2.edges == b.edges);
    json bad = star_to_json(s);
    bad["k"] = 2;
    CHECK_THROWS_AS(star_from_json(bad), std::invalid_argument);
}

TEST_CASE("core JSON uses v:i keys") {
    auto j = core_to_json(CoreGraph::from_generators(2, {Word::generator(2, 1), Word::parse(2, "2.1.2")}));
    CHECK(j["adjacency"]["0:2"] == "1");
    CHECK(j["signature"] == json::array({2, 0}));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("word commands") {
    auto r = run({"word", "normalize", "1.2.2.3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.3\n");
    CHECK(run({"word", "conj", "1.2", "2.1"}).out == "conjugate: g = 1\n");
    CHECK(run({"word", "conj", "1", "2"}).out == "not conjugate\n");
}

TEST_CASE("automorphism expressions") {
    CHECK(equal_exact(cli::parse_aut(3, "sigma:2,1*sigma:2,1"), Automorphism::identity(3)));
    CHECK(equal_exact(cli::parse_aut(5, "Fw:5:2.3"), conj_generator(5, Word::parse(5, "2.3"))));
    CHECK(equal_exact(cli::parse_aut(4, "pc:1.3:2"), partial_conj(4, {1, 3}, 2)));
    CHECK(equal_exact(cli::parse_aut(0, aut_to_json(F(4, 3)).dump()), F(4, 3)));
    CHECK_THROWS_AS(cli::parse_aut(3, "tau:1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_aut(0, "F:3"), std::invalid_argument);
    auto r = run({"aut", "apply", "F:3", "3", "--rank", "4"});
    CHECK(r.out == "1.2.3.2.1\n");
    CHECK(run({"aut", "outer-eq", "ad:1", "id", "-n", "3"}).out == "equal in Out: g = ad_h o f with h = 1\n");
    CHECK(run({"aut", "cn", "swap:1,2", "-n", "3", "--json"}).out == "{\"permutation\":[2,1,3],\"in_Cn\":false}\n");
}

TEST_CASE("star inputs") {
    auto s = cli::parse_star(5, "1,2,3,4|2,3,4,5");
    CHECK(s == leaves_star(5, {1, 5}));
    CHECK_THROWS_AS(cli::parse_star(5, "2,3,4,5|2,1.3.1,4,5"), std::invalid_argument);
    auto r = run({"star", "refine", "2,3,4,5|2,1.3.1,4,5", "-n", "5"});
    CHECK(r.code == 1);
    CHECK(r.out == "incompatible\n");
    CHECK(run({"star", "compatible", "1,2,3,4|2,3,4,5", "1,3,4,5|1,2,3,4", "-n", "5"}).out == "compatible\n");
}

TEST_CASE("complex commands") {
    auto r = run({"complex", "triangle", "1,2,3,4|2,3,4,5", "1,3,4,5|1,2,3,4", "1,3,4,5|2,3,4,5", "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("type Wn3\n", 0) == 0);
    auto j = run({"complex", "triangle", "1,2,3,4|2,3,4,5", "1,3,4,5|1,2,3,4", "1,2,4,5|1,2,3,4", "-n", "5", "--json"});
    auto doc = json::parse(j.out);
    CHECK(doc["type"] == "Wn4");
    CHECK(doc.contains("fourth_vertex"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"word", "normalize", "1.q"}).code == 2);
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"verify", "triangle", "--rank", "3"}).code == 2);
    CHECK(run({"subgroup", "core", "1,2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify output is deterministic and echoes the seed") {
    auto a = run({"verify", "scott-swarup", "--rank", "5", "--seed", "7"});
    auto b = run({"verify", "scott-swarup", "--rank", "5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "suite scott-swarup\nseed 7\nranks 5\ncases 200\nfailures 0\nPASS\n");
    auto t = run({"verify", "triangle", "--rank", "5"});
    CHECK(t.code == 0);
}

TEST_CASE("replay payloads rerun a single case") {
    verify::SuiteParams p;
    p.rank = 5;
    p.seed = 3;
    auto full = verify::run_suite("uniqueness", p);
    verify::Failure f{5, 17, "probe", json::object()};
    json payload = verify::failure_payload(full, f);
    auto r = verify::replay(payload);
    CHECK(r.cases_run == 1);
    CHECK(r.ok());
    std::string path = "replay_payload_test.json";
    std::ofstream(path) << payload.dump();
    auto c = run({"verify", "--replay", path, "--json"});
    std::remove(path.c_str());
    CHECK(c.code == 0);
    CHECK(json::parse(c.out)["case"] == 17);
}

}  // TEST_SUITE
