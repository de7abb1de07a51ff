#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <lfuzzy/lfuzzy.hpp>

namespace {

using namespace lfuzzy;

std::vector<FuzzySet> set_pool(std::size_t universe_size, std::size_t count,
                               int levels, std::uint64_t seed) {
    UniverseRef u = Universe::numbered(universe_size);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, levels);
    std::vector<FuzzySet> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Rational> grades;
        grades.reserve(universe_size);
        for (std::size_t k = 0; k < universe_size; ++k) {
            grades.emplace_back(pick(rng), levels);
        }
        pool.emplace_back(u, std::move(grades));
    }
    return pool;
}

void BM_incl(benchmark::State& state) {
    auto pool = set_pool(static_cast<std::size_t>(state.range(0)), 64, 10, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(incl(pool[i % 64], pool[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_incl)->Arg(4)->Arg(64);

void BM_sim(benchmark::State& state) {
    auto pool = set_pool(static_cast<std::size_t>(state.range(0)), 64, 10, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim(pool[i % 64], pool[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_sim)->Arg(4)->Arg(64);

void BM_dist(benchmark::State& state) {
    auto pool = set_pool(static_cast<std::size_t>(state.range(0)), 64, 10, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dist(pool[i % 64], pool[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_dist)->Arg(4)->Arg(64);

void BM_scalar_kosko(benchmark::State& state) {
    auto pool = set_pool(static_cast<std::size_t>(state.range(0)), 64, 10, 4);
    ScalarMeasureId kosko = ScalarMeasureId::from_index(1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_scalar(kosko, pool[i % 64], pool[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_scalar_kosko)->Arg(4)->Arg(64);

void BM_scalar_kundu(benchmark::State& state) {
    auto pool = set_pool(static_cast<std::size_t>(state.range(0)), 64, 10, 5);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kundu_closed(pool[i % 64], pool[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_scalar_kundu)->Arg(4)->Arg(64);

void BM_suite_inclusion(benchmark::State& state) {
    audit::SearchConfig config;
    config.universe_size = 2;
    config.grid_levels = 2;
    config.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit::run_suite(audit::Suite::InclusionI1I12, config));
    }
}
BENCHMARK(BM_suite_inclusion)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_axiom_grid(benchmark::State& state) {
    audit::SearchConfig config;
    config.universe_size = 2;
    config.grid_levels = 1;
    config.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit::scalar_axiom_grid(config));
    }
}
BENCHMARK(BM_axiom_grid)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
