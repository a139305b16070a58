#include <benchmark/benchmark.h>

#include "momo/clustering.hpp"
#include "momo/engine.hpp"
#include "momo/metrics.hpp"
#include "momo/random.hpp"
#include "momo/ranking.hpp"

using namespace momo;

namespace {

std::vector<std::vector<double>> cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
    RandomStream r(seed);
    std::vector<std::vector<double>> pts(n, std::vector<double>(d));
    for (auto& p : pts) {
        for (auto& v : p) {
            v = r.uniform();
        }
    }
    return pts;
}

void BM_NonDominatedSort(benchmark::State& state) {
    const auto pts = cloud(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(non_dominated_sort(pts));
    }
}
BENCHMARK(BM_NonDominatedSort)->Arg(51)->Arg(1000);

void BM_KMeans(benchmark::State& state) {
    const auto pts = cloud(51, 2, 2);
    RandomStream r(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmeans(pts, static_cast<std::size_t>(state.range(0)), r));
    }
}
BENCHMARK(BM_KMeans)->Arg(2)->Arg(9);

void BM_ClusterCountSearch(benchmark::State& state) {
    const auto pts = cloud(50, 2, 4);
    RandomStream r(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_cluster_count(pts, r));
    }
}
BENCHMARK(BM_ClusterCountSearch);

void BM_Igd(benchmark::State& state) {
    const auto att = cloud(1000, 2, 6);
    const auto ref = cloud(1000, 2, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(igd(att, ref));
    }
}
BENCHMARK(BM_Igd);

void BM_FullRun(benchmark::State& state) {
    const auto& p = find_problem("SYM-PART-Simple");
    RunConfig c;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(p, c));
        ++c.seed;
    }
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
