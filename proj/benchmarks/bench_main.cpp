#include <benchmark/benchmark.h>

#include "kn/cactus.hpp"
#include "kn/crystal.hpp"
#include "kn/involutions.hpp"
#include "kn/sjdt.hpp"
#include "kn/virtualization.hpp"

using namespace kn;

static void BM_CrystalGeneration(benchmark::State& st) {
    Tableau seed = yamanouchi({3, 2, 1}, (int)st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(generate_crystal(seed).size());
}
BENCHMARK(BM_CrystalGeneration)->Arg(3)->Arg(4);

static void BM_Evacuation(benchmark::State& st) {
    auto U = kn_straight_universe(3, (int)st.range(0));
    for (auto _ : st)
        for (auto& t : U) benchmark::DoNotOptimize(evacuation_C(t));
    st.SetItemsProcessed(st.iterations() * U.size());
}
BENCHMARK(BM_Evacuation)->Arg(3)->Arg(4);

static void BM_PartialReversal(benchmark::State& st) {
    auto U = kn_straight_universe(3, 4);
    int j = (int)st.range(0);
    for (auto _ : st)
        for (auto& t : U) benchmark::DoNotOptimize(colorful_partial_reversal(t, j));
    st.SetItemsProcessed(st.iterations() * U.size());
}
BENCHMARK(BM_PartialReversal)->DenseRange(1, 3);

static void BM_VirtualXi(benchmark::State& st) {
    auto U = kn_straight_universe(3, 4);
    for (auto _ : st)
        for (auto& t : U) benchmark::DoNotOptimize(xi_C_via_virtualization(t, 1, 3));
    st.SetItemsProcessed(st.iterations() * U.size());
}
BENCHMARK(BM_VirtualXi);

static void BM_EmbedRoundTrip(benchmark::State& st) {
    auto U = kn_straight_universe(3, 4);
    for (auto _ : st)
        for (auto& t : U) benchmark::DoNotOptimize(invert_E(embed_E(t).p, t.outer(), 3));
    st.SetItemsProcessed(st.iterations() * U.size());
}
BENCHMARK(BM_EmbedRoundTrip);

static void BM_RectifySkew(benchmark::State& st) {
    Tableau t = parse_tableau(".,.,1,-3/.,2,-2/3,-1", 3);
    for (auto _ : st) benchmark::DoNotOptimize(rectify(t));
}
BENCHMARK(BM_RectifySkew);

static void BM_VerifyJsp(benchmark::State& st) {
    auto U = kn_straight_universe(3, 3);
    auto suite = enumerate_relations("jsp", 3);
    for (auto _ : st) {
        Universe u(U);
        benchmark::DoNotOptimize(verify(suite, u).checks);
    }
}
BENCHMARK(BM_VerifyJsp)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
