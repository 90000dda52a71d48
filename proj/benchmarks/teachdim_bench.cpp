#include <benchmark/benchmark.h>

#include "teachdim/gadgets.hpp"
#include "teachdim/hitting.hpp"
#include "teachdim/rng.hpp"
#include "teachdim/sequences.hpp"
#include "teachdim/specifying.hpp"
#include "teachdim/teaching.hpp"

using namespace teachdim;

static std::vector<std::vector<std::uint64_t>> random_constraints(std::uint64_t seed,
                                                                  std::size_t count,
                                                                  std::uint64_t universe) {
    SplitMix64 rng(seed);
    std::vector<std::vector<std::uint64_t>> cons(count);
    for (auto& c : cons) {
        for (std::uint64_t v = 0; v < universe; ++v)
            if (rng.below(3) == 0) c.push_back(v);
        if (c.empty()) c.push_back(rng.below(universe));
    }
    return cons;
}

static void BM_minimal_hitting_set(benchmark::State& state) {
    auto cons = random_constraints(5, (std::size_t)state.range(0), 18);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_hitting_set(cons));
}
BENCHMARK(BM_minimal_hitting_set)->Arg(8)->Arg(16)->Arg(32);

static void BM_td_of_class(benchmark::State& state) {
    SplitMix64 rng(6);
    ConceptClass c = random_class(rng, (std::uint64_t)state.range(0), 14);
    for (auto _ : state) benchmark::DoNotOptimize(td_of_class(c));
}
BENCHMARK(BM_td_of_class)->Arg(6)->Arg(12);

static void BM_tdplus_of_class(benchmark::State& state) {
    SplitMix64 rng(7);
    ConceptClass c = random_class(rng, (std::uint64_t)state.range(0), 14);
    for (auto _ : state) benchmark::DoNotOptimize(tdplus_of_class(c));
}
BENCHMARK(BM_tdplus_of_class)->Arg(6)->Arg(12);

static void BM_xtd_exhaustive(benchmark::State& state) {
    SplitMix64 rng(8);
    ConceptClass c = random_class(rng, 6, (std::uint64_t)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(xtd_of_class(c));
}
BENCHMARK(BM_xtd_exhaustive)->Arg(10)->Arg(14);

static void BM_rtd_exact(benchmark::State& state) {
    SplitMix64 rng(9);
    ConceptClass c = random_class(rng, (std::uint64_t)state.range(0), 10);
    for (auto _ : state) benchmark::DoNotOptimize(rtd_exact(c, true));
}
BENCHMARK(BM_rtd_exact)->Arg(5)->Arg(7);

static void BM_rtd1plus_greedy(benchmark::State& state) {
    SplitMix64 rng(10);
    ConceptClass c = random_class(rng, 12, 14);
    for (auto _ : state) benchmark::DoNotOptimize(rtd1plus(c));
}
BENCHMARK(BM_rtd1plus_greedy);

static void BM_gan_build(benchmark::State& state) {
    SetDescriptor a = SetDescriptor::parse("cofinite:{}");
    for (auto _ : state)
        benchmark::DoNotOptimize(
            build_gan_bundle(a, (std::uint64_t)state.range(0), 3, default_horizons()));
}
BENCHMARK(BM_gan_build)->Arg(1)->Arg(2);

static void BM_gan_sequence_validate(benchmark::State& state) {
    GanBundle b = build_gan_bundle(SetDescriptor::parse("cofinite:{}"), 1, 3,
                                   default_horizons());
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_sequence(b.cls, b.witness_sequence, true));
}
BENCHMARK(BM_gan_sequence_validate);

static void BM_verify_acds(benchmark::State& state) {
    SetDescriptor w = SetDescriptor::parse("progressions:{(2,0)}");
    for (auto _ : state) benchmark::DoNotOptimize(verify_acds(w, default_horizons()));
}
BENCHMARK(BM_verify_acds);

BENCHMARK_MAIN();
