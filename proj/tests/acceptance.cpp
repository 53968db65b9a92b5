// Acceptance runner: one PASS/FAIL line per criterion. Every criterion is an
// exact check (no numeric tolerance); the time limits below are wall-clock
// bounds on the whole suite.

#include <cstdio>
#include <string>
#include <vector>

#include "ucox/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    std::vector<int> ranks;
    int cases_per_rank;  // expected case count for each rank
    double time_limit_s;
    std::uint64_t seed;
};

const std::vector<Criterion> kCriteria = {
    {1, "word algebra vs brute-force oracles", "word-algebra", {3, 4, 5, 6}, 10000, 5.0, 1},
    {2, "generator laws and class permutation onto S_n", "generator-laws", {3, 4, 5, 6}, 202, 1.0, 1},
    {3, "commutation witnesses", "commutation", {5, 6}, 203, 30.0, 1},
    {4, "core-graph membership vs coset enumeration", "membership", {3, 4, 5, 6}, 2000, 30.0, 1},
    {5, "refinement roundtrips of random stars", "scott-swarup", {5}, 200, 60.0, 7},
    {6, "uniqueness of one-edge splittings", "uniqueness", {5}, 100, 10.0, 1},
    {7, "triangle classification and fourth vertices", "triangle", {5}, 53, 60.0, 1},
    {8, "induced-map equivariance", "induced-maps", {5}, 50, 60.0, 1},
    {9, "twists", "twists", {5}, 401, 30.0, 1},
    {10, "compatibility discrimination", "compatibility", {5}, 61, 30.0, 1},
};

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : kCriteria) {
        std::string why;
        ucox::verify::SuiteResult r;
        try {
            double total = 0;
            int cases = 0;
            for (int n : c.ranks) {
                ucox::verify::SuiteParams p;
                p.rank = n;
                p.seed = c.seed;
                auto one = ucox::verify::run_suite(c.suite, p);
                total += one.wall_seconds;
                cases += one.cases_run;
                if (one.cases_run != c.cases_per_rank)
                    why = "rank " + std::to_string(n) + " ran " + std::to_string(one.cases_run) + " cases";
                if (!one.ok() && why.empty())
                    why = std::to_string(one.failures.size()) + " failures at rank " + std::to_string(n) +
                          ", first: " + ucox::verify::failure_payload(one, one.failures.front()).dump();
            }
            r.cases_run = cases;
            r.wall_seconds = total;
            if (why.empty() && total > c.time_limit_s)
                why = "time " + std::to_string(total) + " s exceeds " + std::to_string(c.time_limit_s) + " s";
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        bool ok = why.empty();
        failed += !ok;
        std::printf("%s criterion %2d %-46s suite=%-15s cases=%-6d time=%.2fs limit=%.0fs%s%s\n", ok ? "PASS" : "FAIL",
                    c.id, c.title, c.suite, r.cases_run, r.wall_seconds, c.time_limit_s, ok ? "" : "  ",
                    why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed == 0 ? 0 : 1;
}
