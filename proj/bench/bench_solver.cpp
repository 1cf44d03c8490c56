// Serial reference vs OpenMP search, and the two closure kernels.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/products.hpp"

namespace {

zf::Graph instance(int which) {
    switch (which) {
    case 0: return zf::corona(zf::path(4), zf::path(3)).graph();          // 16 vertices
    case 1: return zf::lexicographic(zf::cycle(5), zf::path(3)).graph();  // 15 vertices
    default: return zf::corona(zf::cycle(4), zf::complete(3)).graph();    // 16 vertices
    }
}

const char* instance_name(int which) {
    static const char* names[] = {"P4(.)P3", "C5oP3", "C4(.)K3"};
    return names[which];
}

void BM_SolveSerial(benchmark::State& st) {
    const auto g = instance(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(zf::zero_forcing_number_serial(g).value);
    st.SetLabel(instance_name(static_cast<int>(st.range(0))));
}

void BM_SolveParallel(benchmark::State& st) {
    const auto g = instance(static_cast<int>(st.range(0)));
    zf::SolveOptions opts;
    opts.threads = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(zf::zero_forcing_number(g, opts).value);
    st.SetLabel(instance_name(static_cast<int>(st.range(0))));
}

void BM_ClosureMask(benchmark::State& st) {
    const auto g = zf::corona(zf::path(5), zf::path(3)).graph();
    const auto adj = g.masks();
    const std::uint64_t seed = 0b11111;
    for (auto _ : st)
        benchmark::DoNotOptimize(zf::closure_mask(adj, seed));
}

void BM_ClosureScheduled(benchmark::State& st) {
    const auto g = zf::corona(zf::path(5), zf::path(3)).graph();
    const std::vector<zf::VertexId> seed = {0, 1, 2, 3, 4};
    for (auto _ : st)
        benchmark::DoNotOptimize(zf::closure(g, seed).forces.size());
}

} // namespace

BENCHMARK(BM_SolveSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosureMask);
BENCHMARK(BM_ClosureScheduled);

BENCHMARK_MAIN();
