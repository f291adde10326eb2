#include "gfc/free_action.hpp"
#include "gfc/moduli.hpp"
#include "gfc/quotient_equations.hpp"
#include "gfc/verification.hpp"

#include <benchmark/benchmark.h>

using namespace gfc;

namespace {

void BM_enumerate_parallel(benchmark::State& st) {
    const CurveType ct(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_free_subgroups(ct, static_cast<int>(st.range(2))));
}

void BM_enumerate_serial(benchmark::State& st) {
    const CurveType ct(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_free_subgroups_serial(ct, static_cast<int>(st.range(2))));
}

const std::vector<Complex> kLambda8{3.0, 7.0, 11.0, 13.0, 17.0, 19.0};

void BM_same_orbit_parallel(benchmark::State& st) {
    const std::vector<Complex> delta{2.0, 4.0, 5.0, 6.0, 8.0, 9.0};
    for (auto _ : st) benchmark::DoNotOptimize(same_orbit(kLambda8, delta));
}

void BM_same_orbit_serial(benchmark::State& st) {
    const std::vector<Complex> delta{2.0, 4.0, 5.0, 6.0, 8.0, 9.0};
    for (auto _ : st) benchmark::DoNotOptimize(same_orbit_serial(kLambda8, delta));
}

CyclicGonalModel bench_model() {
    const CurveType ct(3, 4);
    return cyclic_gonal_model(enumerate_free_subgroups(ct, 2).front(), {3.0, 7.0});
}

void BM_verify_parallel(benchmark::State& st) {
    const auto model = bench_model();
    for (auto _ : st) benchmark::DoNotOptimize(verify_quotient_model(model, {3.0, 7.0}, 2000));
}

void BM_verify_serial(benchmark::State& st) {
    const auto model = bench_model();
    for (auto _ : st) benchmark::DoNotOptimize(verify_quotient_model_serial(model, {3.0, 7.0}, 2000));
}

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Args({2, 7, 3})->Args({3, 5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Args({2, 7, 3})->Args({3, 5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_same_orbit_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_same_orbit_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
