#include <qlwb/axioms.hpp>
#include <qlwb/completion.hpp>
#include <qlwb/constructors.hpp>
#include <qlwb/corpus.hpp>
#include <qlwb/deciders.hpp>
#include <qlwb/diagrams.hpp>
#include <qlwb/embedding.hpp>
#include <qlwb/factors.hpp>
#include <qlwb/quantum.hpp>
#include <qlwb/states.hpp>

#include <benchmark/benchmark.h>

using namespace qlwb;

static void bm_check_axioms(benchmark::State & state)
{
    auto s = corpus_structure("thm55");
    for (auto _ : state)
        benchmark::DoNotOptimize(check_axioms(s));
}
BENCHMARK(bm_check_axioms)->Unit(benchmark::kMillisecond);

static void bm_check_axioms_free_oml2(benchmark::State & state)
{
    const auto & s = free_oml2_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_axioms(s));
}
BENCHMARK(bm_check_axioms_free_oml2)->Unit(benchmark::kMillisecond);

static void bm_macneille_loop(benchmark::State & state)
{
    auto s = paste_to_omp(loop_diagram(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(macneille_ortho(s));
}
BENCHMARK(bm_macneille_loop)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void bm_kalmbach_boolean(benchmark::State & state)
{
    auto p = underlying_poset(boolean_algebra(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(kalmbach(p));
}
BENCHMARK(bm_kalmbach_boolean)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void bm_fact(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_fact(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_fact)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void bm_decide_oml2(benchmark::State & state)
{
    auto eq = parse_equation("(x & y) | (x & y') | (x' & y) | (x' & y') = (x | y') & (x' | y) | (x & y')");
    free_oml2_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_oml2(eq));
}
BENCHMARK(bm_decide_oml2)->Unit(benchmark::kMicrosecond);

static void bm_embed_mo2_into_thm55(benchmark::State & state)
{
    auto small = mo(2);
    auto big = corpus_structure("thm55");
    for (auto _ : state)
        benchmark::DoNotOptimize(embed_search(small, big, EmbedMode::omp));
}
BENCHMARK(bm_embed_mo2_into_thm55)->Unit(benchmark::kMillisecond);

static void bm_two_valued_thm55(benchmark::State & state)
{
    auto s = corpus_structure("thm55");
    for (auto _ : state)
        benchmark::DoNotOptimize(two_valued_states(s));
}
BENCHMARK(bm_two_valued_thm55)->Unit(benchmark::kMillisecond);

static void bm_subspace_refute(benchmark::State & state)
{
    auto eq = n_distributive_term(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_refute(eq, 3, 200, 1));
}
BENCHMARK(bm_subspace_refute)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
