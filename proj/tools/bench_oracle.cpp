#include <benchmark/benchmark.h>

#include "puzzle/golden.hpp"
#include "puzzle/oracle.hpp"

using namespace puzzle;

namespace {

OraclePlan n16_plan() {
    std::string l = partition_to_binary(golden::n16_lambda(), 16, 8);
    std::string m = partition_to_binary(golden::n16_mu(), 16, 8);
    return OraclePlan(Boundary{l, m, std::nullopt}, std::make_shared<const PieceSet>(builtin_piece_set(BuiltinId::omega0)));
}

OraclePlan free_plan(int n, BuiltinId id) {
    std::string w;
    for (int i = 0; i < n; ++i) w.push_back(i % 2 ? '0' : '1');
    return OraclePlan(Boundary{w, w, std::nullopt}, std::make_shared<const PieceSet>(builtin_piece_set(id)));
}

void BM_n16_serial(benchmark::State& st) {
    OraclePlan p = n16_plan();
    for (auto _ : st) benchmark::DoNotOptimize(p.count_serial());
}
void BM_n16_parallel(benchmark::State& st) {
    OraclePlan p = n16_plan();
    for (auto _ : st) benchmark::DoNotOptimize(p.count_parallel());
}
void BM_free_serial(benchmark::State& st) {
    OraclePlan p = free_plan(static_cast<int>(st.range(0)), static_cast<BuiltinId>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(p.count_serial());
}
void BM_free_parallel(benchmark::State& st) {
    OraclePlan p = free_plan(static_cast<int>(st.range(0)), static_cast<BuiltinId>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(p.count_parallel());
}

}  // namespace

BENCHMARK(BM_n16_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_n16_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_free_serial)->ArgsProduct({{8, 10, 12}, {0, 1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_free_parallel)->ArgsProduct({{8, 10, 12}, {0, 1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
