#include "cdes/descent_formula.hpp"
#include "cdes/descent_polynomial.hpp"
#include "cdes/descent_recursion.hpp"
#include "cdes/generating_tree.hpp"
#include "cdes/perm_core.hpp"
#include "cdes/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace cdes;

namespace {

ValueSet alternating(int n) {
    std::vector<int> elements;
    for (int s = n; s >= 2; s -= 2) elements.push_back(s);
    return ValueSet::from_unsorted(elements);
}

void BM_BruteTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(brute_cdes_table(n, {.cap = n, .threads = threads}));
}
BENCHMARK(BM_BruteTable)->Args({8, 1})->Args({9, 1})->Args({10, 1})->Args({10, 0})->Unit(benchmark::kMillisecond);

void BM_Formula(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ValueSet s = alternating(n);
    for (auto _ : state) benchmark::DoNotOptimize(cdes_formula(n, s));
}
BENCHMARK(BM_Formula)->DenseRange(8, 32, 8)->Unit(benchmark::kMicrosecond);

void BM_FormulaTyped(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ValueSet s = alternating(n);
    for (auto _ : state) benchmark::DoNotOptimize(cdes_formula_typed(n, s));
}
BENCHMARK(BM_FormulaTyped)->DenseRange(8, 24, 8)->Unit(benchmark::kMicrosecond);

void BM_RecursionMemo(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ValueSet s = alternating(n);
    for (auto _ : state) {
        MemoCache cache;
        benchmark::DoNotOptimize(cdes_recursive(n, s, &cache));
    }
}
BENCHMARK(BM_RecursionMemo)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_InsertionTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cdes_insertion_table(n));
}
BENCHMARK(BM_InsertionTable)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_TreeWeightSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto d = gap_vector(alternating(n)).gaps;
    for (auto _ : state) benchmark::DoNotOptimize(tree_weight_sum(d));
}
BENCHMARK(BM_TreeWeightSum)->DenseRange(8, 32, 8)->Unit(benchmark::kMicrosecond);

void BM_Gn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gn(n));
}
BENCHMARK(BM_Gn)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_TableauxBrute(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const PartitionShape square(std::vector<int>(static_cast<std::size_t>(side), side));
    for (auto _ : state) benchmark::DoNotOptimize(brute_count_tableaux(square));
}
BENCHMARK(BM_TableauxBrute)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_TableauxFormula(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const PartitionShape square(std::vector<int>(static_cast<std::size_t>(side), side));
    for (auto _ : state) benchmark::DoNotOptimize(count_tableaux_formula(square));
}
BENCHMARK(BM_TableauxFormula)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
