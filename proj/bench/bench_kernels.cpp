#include <benchmark/benchmark.h>

#include "ucox/oracles.hpp"
#include "ucox/parallel.hpp"

namespace {

using namespace ucox;

std::vector<std::vector<Word>> random_subgroups(int count) {
    auto rng = rnd::case_rng(1, "bench", 6, 0);
    std::vector<std::vector<Word>> subs;
    for (int k = 0; k < count; ++k) {
        auto f = rnd::random_automorphism(rng, 6, rnd::uniform(rng, 2, 8));
        std::vector<Word> hs;
        for (int i : rnd::random_subset(rng, 6, 5)) hs.push_back(f.image(i));
        subs.push_back(hs);
    }
    return subs;
}

std::vector<StarClass> random_stars(int count) {
    auto rng = rnd::case_rng(2, "bench", 5, 0);
    auto base = star_class(standard_star(5, {2, 3, 4}));
    std::vector<StarClass> out;
    for (int k = 0; k < count; ++k) out.push_back(act(rnd::random_automorphism(rng, 5, rnd::uniform(rng, 0, 3)), base));
    return out;
}

void BM_BatchClasses(benchmark::State& state) {
    auto subs = random_subgroups(512);
    Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(batch_classes(6, subs, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(subs.size()));
}

void BM_CompatibilityFilter(benchmark::State& state) {
    std::vector<FreeFactorClass> pool;
    for (auto& s : random_stars(200)) pool.insert(pool.end(), s.corank1.begin(), s.corank1.end());
    auto base = star_class(standard_star(5, {2, 3, 4})).corank1;
    Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(compatibility_filter(base, pool, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pool.size()));
}

void BM_AdjacencyMatrix(benchmark::State& state) {
    auto stars = random_stars(120);
    Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(adjacency_matrix(ComplexKind::X, stars, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(stars.size() * (stars.size() - 1) / 2));
}

}  // namespace

BENCHMARK(BM_BatchClasses)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompatibilityFilter)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyMatrix)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
